#pragma once

// Test-only oracles and random generators. The determinant oracle below is
// the independent reference the Bareiss implementation is checked against;
// it must stay a plain permutation expansion.

#include <numeric>
#include <random>
#include <vector>

#include "braidalex/braid.hpp"
#include "braidalex/laurent.hpp"

namespace testutil {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Signed permutation expansion: sum over all permutations of
// sign(p) * prod_i M[i][p(i)].
inline braidalex::LaurentPoly laplace_determinant(const braidalex::PolyMatrix& m) {
    using braidalex::LaurentPoly;
    const int n = m.rows();
    if (n == 0) return LaurentPoly(1);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    LaurentPoly det;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        LaurentPoly prod(inversions % 2 == 0 ? 1 : -1);
        for (int i = 0; i < n; ++i) prod = prod * m.at(i, perm[i]);
        det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

struct PolyOptions {
    int max_terms = 8;
    int max_vars = 4;       // draws variables among t1..t{max_vars} and x
    int exp_lo = -5;
    int exp_hi = 5;
    int coeff_lo = -9;
    int coeff_hi = 9;
    bool use_axis = false;  // whether x may appear
};

inline braidalex::LaurentPoly random_poly(Rng& rng, const PolyOptions& opt = {}) {
    using braidalex::ExpVector;
    using braidalex::LaurentPoly;
    using braidalex::VarId;
    LaurentPoly p;
    int terms = rand_int(rng, 0, opt.max_terms);
    for (int t = 0; t < terms; ++t) {
        ExpVector e;
        int vars = rand_int(rng, 0, opt.max_vars);
        for (int v = 0; v < vars; ++v) {
            VarId var = VarId::t(rand_int(rng, 1, opt.max_vars));
            if (opt.use_axis && rand_int(rng, 0, 4) == 0) var = VarId::axis();
            int exp = rand_int(rng, opt.exp_lo, opt.exp_hi);
            if (exp == 0) continue;
            e[var] = exp;
        }
        int c = rand_int(rng, opt.coeff_lo, opt.coeff_hi);
        p.add_term(e, c);
    }
    return p;
}

inline braidalex::LaurentPoly random_nonzero_poly(Rng& rng, const PolyOptions& opt = {}) {
    for (;;) {
        braidalex::LaurentPoly p = random_poly(rng, opt);
        if (!p.is_zero()) return p;
    }
}

inline braidalex::LaurentPoly random_monomial(Rng& rng, const PolyOptions& opt = {}) {
    using braidalex::ExpVector;
    using braidalex::VarId;
    ExpVector e;
    int vars = rand_int(rng, 0, opt.max_vars);
    for (int v = 0; v < vars; ++v) {
        int exp = rand_int(rng, opt.exp_lo, opt.exp_hi);
        if (exp != 0) e[VarId::t(rand_int(rng, 1, opt.max_vars))] = exp;
    }
    int c = 0;
    while (c == 0) c = rand_int(rng, opt.coeff_lo, opt.coeff_hi);
    return braidalex::LaurentPoly::monomial(c, e);
}

inline braidalex::PolyMatrix random_matrix(Rng& rng, int n, const PolyOptions& opt = {}) {
    braidalex::PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = random_poly(rng, opt);
    return m;
}

inline braidalex::BraidWord random_word(Rng& rng, int strands, int max_len) {
    braidalex::BraidWord w;
    w.strands = strands;
    int len = strands < 2 ? 0 : rand_int(rng, 0, max_len);
    for (int r = 0; r < len; ++r)
        w.letters.push_back({rand_int(rng, 1, strands - 1), rand_int(rng, 0, 1) ? +1 : -1});
    return w;
}

}  // namespace testutil
