#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "braidalex/errors.hpp"

// Exact sparse multivariate Laurent polynomials over the integers, and
// dense matrices over them.  All arithmetic is exact; there is no floating
// point anywhere.  The global monomial order is pure lexicographic with
// t1 > t2 > ... > tn > x, and every deterministic output (printing,
// canonical forms, division) is defined against it.

namespace braidalex {

using Int = boost::multiprecision::cpp_int;

// A variable. Index j >= 1 names the strand variable t_j; index 0 names the
// axis variable x. Map order below is significance order under the global
// lex order, so iterating a sorted container visits t1, t2, ..., x.
struct VarId {
    int id = 0;

    static constexpr VarId axis() { return VarId{0}; }
    static constexpr VarId t(int j) { return VarId{j}; }

    constexpr bool is_axis() const { return id == 0; }

    std::string name() const;

    friend constexpr bool operator==(VarId a, VarId b) { return a.id == b.id; }
    friend constexpr bool operator!=(VarId a, VarId b) { return a.id != b.id; }
    friend constexpr bool operator<(VarId a, VarId b) {
        if (a.id == b.id) return false;
        if (a.id == 0) return false;  // x is least significant
        if (b.id == 0) return true;
        return a.id < b.id;
    }
};

// Sparse exponent vector of a Laurent monomial. Invariant: no entry is 0.
using ExpVector = std::map<VarId, int>;

ExpVector exp_mul(const ExpVector& a, const ExpVector& b);  // exponents add
ExpVector exp_div(const ExpVector& a, const ExpVector& b);  // exponents subtract
ExpVector exp_neg(const ExpVector& a);

// Three-way comparison under the global lex order. >0 means a > b.
int monomial_cmp(const ExpVector& a, const ExpVector& b);

struct MonomialGreater {
    bool operator()(const ExpVector& a, const ExpVector& b) const {
        return monomial_cmp(a, b) > 0;
    }
};

class LaurentPoly {
public:
    // Terms keyed descending, so begin() is the leading term.
    using TermMap = std::map<ExpVector, Int, MonomialGreater>;

    LaurentPoly() = default;  // zero
    LaurentPoly(int c) : LaurentPoly(Int(c)) {}
    LaurentPoly(Int c);

    static LaurentPoly variable(VarId v, int exponent = 1);
    static LaurentPoly monomial(Int coeff, const ExpVector& exponents);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Leading term under the global order; polynomial must be nonzero.
    const ExpVector& leading_monomial() const { return terms_.begin()->first; }
    const Int& leading_coeff() const { return terms_.begin()->second; }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& q);
    LaurentPoly& operator-=(const LaurentPoly& q);
    LaurentPoly& operator*=(const LaurentPoly& q);

    friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
    friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);

    friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) {
        return p.terms_ == q.terms_;
    }
    friend bool operator!=(const LaurentPoly& p, const LaurentPoly& q) { return !(p == q); }

    // Adds coeff * monomial(exps), keeping the sparse-canonical invariant.
    void add_term(const ExpVector& exps, const Int& coeff);

    // Per-variable minimum exponent over all terms (0 counts when a variable
    // is absent from a term). Empty for the zero polynomial.
    ExpVector min_exponents() const;

private:
    TermMap terms_;
};

// Exact quotient p / d. Throws DivisorZero when d = 0 and NotDivisible when
// the division leaves a remainder.
LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& d);

// The unit-normal form u*p, u = +/-(monomial), with every variable's minimum
// exponent 0 and a positive coefficient on the greatest monomial.
LaurentPoly canonicalize(const LaurentPoly& p);

bool units_equal(const LaurentPoly& p, const LaurentPoly& q);

// Renames variables; entries absent from the map are kept. Like terms are
// recollected exactly, so collisions may cancel.
LaurentPoly substitute(const LaurentPoly& p, const std::map<VarId, VarId>& map);

std::string to_string(const LaurentPoly& p);

class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(int rows, int cols);
    PolyMatrix(int rows, int cols, std::vector<LaurentPoly> entries);

    static PolyMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    LaurentPoly& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    const LaurentPoly& at(int r, int c) const {
        return entries_[static_cast<std::size_t>(r) * cols_ + c];
    }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

private:
    int rows_, cols_;
    std::vector<LaurentPoly> entries_;
};

PolyMatrix operator*(const LaurentPoly& s, const PolyMatrix& m);
PolyMatrix substitute(const PolyMatrix& m, const std::map<VarId, VarId>& map);

// Exact determinant by fraction-free Bareiss elimination. Each row is first
// scaled by a monomial unit so its entries have nonnegative exponents; the
// extracted units multiply back into the result. det of the 0x0 matrix is 1.
LaurentPoly determinant(const PolyMatrix& m);

}  // namespace braidalex
