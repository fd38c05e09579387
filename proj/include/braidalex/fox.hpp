#pragma once

#include <map>
#include <string>
#include <vector>

#include "braidalex/braid.hpp"
#include "braidalex/laurent.hpp"

// Independent recomputation of the braid-plus-axis Alexander polynomial from
// the link group presentation: braid automorphisms of the free group, Fox
// free derivatives of the relations, and the determinant recipe. Used to
// cross-validate the coloured-Burau pipeline end to end.

namespace braidalex {

// Symbol 0 is the axis meridian x; symbol j >= 1 is the strand meridian x_j.
constexpr int kAxisSymbol = 0;

struct FreeLetter {
    int symbol;
    int sign;  // +1 or -1
    friend bool operator==(const FreeLetter& a, const FreeLetter& b) {
        return a.symbol == b.symbol && a.sign == b.sign;
    }
};

// A word in the free group. Stored as written; reduced() cancels adjacent
// inverse pairs.
class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(std::vector<FreeLetter> letters) : letters_(std::move(letters)) {}

    static FreeWord generator(int symbol, int sign = +1) {
        return FreeWord({{symbol, sign}});
    }

    const std::vector<FreeLetter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    FreeWord& append(int symbol, int sign) {
        letters_.push_back({symbol, sign});
        return *this;
    }
    FreeWord& append(const FreeWord& other) {
        letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
        return *this;
    }

    FreeWord inverse() const;
    FreeWord reduced() const;

    friend bool operator==(const FreeWord& a, const FreeWord& b) {
        return a.letters_ == b.letters_;
    }

private:
    std::vector<FreeLetter> letters_;
};

std::string to_string(const FreeWord& w);

// The elementary braid automorphism F_sigma_i (sign +1): x_i -> x_{i+1},
// x_{i+1} -> x_{i+1} x_i x_{i+1}^{-1}, others fixed. sign -1 applies the
// inverse substitution x_{i+1} -> x_i, x_i -> x_i^{-1} x_{i+1} x_i. The
// result is freely reduced.
FreeWord apply_sigma(const FreeWord& word, int i, int sign, int strands);

// F_beta(x_generator) for the whole word, composed so that beta -> F_beta is
// a group homomorphism: the word's last letter acts on the generator first,
// its first (topmost) letter acts last.
FreeWord braid_automorphism(const BraidWord& w, int generator);

// Maps each symbol to an invertible monomial +/-(monomial).
using PhiMap = std::map<int, LaurentPoly>;

// phi applied to a whole word (multiplicative extension).
LaurentPoly phi_eval(const FreeWord& word, const PhiMap& phi);

// phi(d word / d wrt) via the product rule d(uv) = du + phi(u) dv with
// dg/dg = 1, dg^{-1}/dg = -phi(g)^{-1}, dh/dg = 0.
LaurentPoly fox_derivative_eval(const FreeWord& word, int wrt, const PhiMap& phi);

// Builds the Fox matrix of the relations F_beta(x_i) = x^{-1} x_i x over the
// meridian columns (the axis column deleted), takes its determinant, divides
// exactly by 1 - x, and canonicalizes. Agrees with axis_link_polynomial up
// to units on every word.
LaurentPoly oracle_axis_polynomial(const BraidWord& w);

}  // namespace braidalex
