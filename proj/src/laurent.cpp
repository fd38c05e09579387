#include "braidalex/laurent.hpp"

#include <utility>

namespace braidalex {

std::string VarId::name() const {
    return is_axis() ? std::string("x") : "t" + std::to_string(id);
}

ExpVector exp_mul(const ExpVector& a, const ExpVector& b) {
    ExpVector out = a;
    for (const auto& [v, e] : b) {
        int ne = out[v] + e;
        if (ne == 0)
            out.erase(v);
        else
            out[v] = ne;
    }
    return out;
}

ExpVector exp_div(const ExpVector& a, const ExpVector& b) { return exp_mul(a, exp_neg(b)); }

ExpVector exp_neg(const ExpVector& a) {
    ExpVector out;
    for (const auto& [v, e] : a) out.emplace(v, -e);
    return out;
}

int monomial_cmp(const ExpVector& a, const ExpVector& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            // variable present only on the a side; b's exponent there is 0
            return ia->second > 0 ? 1 : -1;
        }
        if (ia == a.end() || ib->first < ia->first) {
            return ib->second > 0 ? -1 : 1;
        }
        if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
        ++ia;
        ++ib;
    }
    return 0;
}

LaurentPoly::LaurentPoly(Int c) {
    if (c != 0) terms_.emplace(ExpVector{}, std::move(c));
}

LaurentPoly LaurentPoly::variable(VarId v, int exponent) {
    LaurentPoly p;
    ExpVector e;
    if (exponent != 0) e.emplace(v, exponent);
    p.terms_.emplace(std::move(e), Int(1));
    return p;
}

LaurentPoly LaurentPoly::monomial(Int coeff, const ExpVector& exponents) {
    LaurentPoly p;
    if (coeff != 0) {
        ExpVector e;
        for (const auto& [v, x] : exponents)
            if (x != 0) e.emplace(v, x);
        p.terms_.emplace(std::move(e), std::move(coeff));
    }
    return p;
}

void LaurentPoly::add_term(const ExpVector& exps, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly out;
    for (const auto& [ep, cp] : p.terms_)
        for (const auto& [eq, cq] : q.terms_) out.add_term(exp_mul(ep, eq), cp * cq);
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& q) {
    *this = *this * q;
    return *this;
}

namespace {

// Running per-variable minimum over exponent vectors, where a variable
// absent from a vector counts as exponent 0. Zero minima are not stored.
void min_merge(ExpVector& mins, const ExpVector& e, bool first) {
    if (first) {
        mins = e;
        return;
    }
    for (auto it = mins.begin(); it != mins.end();) {
        auto found = e.find(it->first);
        int here = found == e.end() ? 0 : found->second;
        if (here < it->second) it->second = here;
        if (it->second == 0)
            it = mins.erase(it);
        else
            ++it;
    }
    for (const auto& [v, x] : e)
        if (x < 0 && mins.find(v) == mins.end()) mins.emplace(v, x);
}

}  // namespace

ExpVector LaurentPoly::min_exponents() const {
    ExpVector mins;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        (void)c;
        min_merge(mins, e, first);
        first = false;
    }
    return mins;
}

namespace {

// Drops one monomial unit from p so every per-variable minimum exponent
// becomes 0; returns the dropped exponent vector.
ExpVector normalize_min(LaurentPoly& p) {
    ExpVector mins = p.min_exponents();
    if (!mins.empty()) p = p * LaurentPoly::monomial(1, exp_neg(mins));
    return mins;
}

// True ordinary-divisibility of monomials: every exponent of b occurs in a
// with at least that value (both assumed nonnegative).
bool exp_divides(const ExpVector& b, const ExpVector& a) {
    for (const auto& [v, e] : b) {
        auto it = a.find(v);
        if (it == a.end() || it->second < e) return false;
    }
    return true;
}

}  // namespace

LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero()) throw DivisorZero("exact_divide: divisor is zero");
    if (p.is_zero()) return LaurentPoly();

    // Factor out monomial units so both operands are ordinary polynomials
    // with per-variable minimum exponent 0; then p/d = (mp/md) * (P/D) and
    // the ordinary quotient, when it exists, has no negative exponents.
    LaurentPoly rem = p, div = d;
    ExpVector mp = normalize_min(rem);
    ExpVector md = normalize_min(div);

    const ExpVector& lead_e = div.leading_monomial();
    const Int& lead_c = div.leading_coeff();

    LaurentPoly quot;
    while (!rem.is_zero()) {
        const ExpVector& re = rem.leading_monomial();
        const Int& rc = rem.leading_coeff();
        if (!exp_divides(lead_e, re) || rc % lead_c != 0)
            throw NotDivisible("exact_divide: nonzero remainder");
        LaurentPoly u = LaurentPoly::monomial(rc / lead_c, exp_div(re, lead_e));
        quot += u;
        rem -= u * div;
    }
    return quot * LaurentPoly::monomial(1, exp_div(mp, md));
}

LaurentPoly canonicalize(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly out = p;
    ExpVector mins = out.min_exponents();
    if (!mins.empty()) out = out * LaurentPoly::monomial(1, exp_neg(mins));
    if (out.leading_coeff() < 0) out = -out;
    return out;
}

bool units_equal(const LaurentPoly& p, const LaurentPoly& q) {
    return canonicalize(p) == canonicalize(q);
}

LaurentPoly substitute(const LaurentPoly& p, const std::map<VarId, VarId>& map) {
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) {
        ExpVector ne;
        for (const auto& [v, x] : e) {
            auto it = map.find(v);
            VarId target = it == map.end() ? v : it->second;
            int nx = (ne[target] += x);
            if (nx == 0) ne.erase(target);
        }
        out.add_term(ne, c);
    }
    return out;
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        bool neg = c < 0;
        Int mag = neg ? Int(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        for (const auto& [v, x] : e) {
            if (!mono.empty()) mono += "*";
            mono += v.name();
            if (x != 1) mono += "^" + std::to_string(x);
        }
        if (mono.empty()) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + "*";
            out += mono;
        }
    }
    return out;
}

PolyMatrix::PolyMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}

PolyMatrix::PolyMatrix(int rows, int cols, std::vector<LaurentPoly> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("PolyMatrix: entry count does not match shape");
}

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly(1);
    return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("PolyMatrix: shape mismatch in product");
    PolyMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const LaurentPoly& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("PolyMatrix: shape mismatch in difference");
    PolyMatrix out = a;
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) out.at(i, j) -= b.at(i, j);
    return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

PolyMatrix operator*(const LaurentPoly& s, const PolyMatrix& m) {
    PolyMatrix out = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = s * out.at(i, j);
    return out;
}

PolyMatrix substitute(const PolyMatrix& m, const std::map<VarId, VarId>& map) {
    PolyMatrix out = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = substitute(out.at(i, j), map);
    return out;
}

LaurentPoly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare("determinant: matrix is not square");
    const int n = m.rows();
    if (n == 0) return LaurentPoly(1);  // empty product

    PolyMatrix w = m;

    // Scale each row to nonnegative exponents; the extracted monomial units
    // multiply back into the determinant at the end.
    ExpVector unit;
    for (int r = 0; r < n; ++r) {
        bool all_zero = true;
        ExpVector mins;
        bool first = true;
        for (int j = 0; j < n; ++j) {
            const LaurentPoly& e = w.at(r, j);
            if (e.is_zero()) continue;
            all_zero = false;
            min_merge(mins, e.min_exponents(), first);
            first = false;
        }
        if (all_zero) return LaurentPoly();
        if (!mins.empty()) {
            LaurentPoly inv = LaurentPoly::monomial(1, exp_neg(mins));
            for (int j = 0; j < n; ++j) w.at(r, j) = w.at(r, j) * inv;
            unit = exp_mul(unit, mins);
        }
    }

    // Bareiss: intermediate entries are minors of the scaled matrix, so every
    // division by the previous pivot is exact.
    int sign = 1;
    LaurentPoly prev(1);
    for (int c = 0; c < n - 1; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r) {
            if (!w.at(r, c).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return LaurentPoly();
        if (pivot != c) {
            for (int j = 0; j < n; ++j) std::swap(w.at(c, j), w.at(pivot, j));
            sign = -sign;
        }
        for (int r = c + 1; r < n; ++r) {
            for (int j = c + 1; j < n; ++j)
                w.at(r, j) =
                    exact_divide(w.at(c, c) * w.at(r, j) - w.at(r, c) * w.at(c, j), prev);
            w.at(r, c) = LaurentPoly();
        }
        prev = w.at(c, c);
    }

    LaurentPoly det = w.at(n - 1, n - 1) * LaurentPoly::monomial(1, unit);
    return sign < 0 ? -det : det;
}

}  // namespace braidalex
