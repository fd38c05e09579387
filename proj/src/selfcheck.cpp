#include "braidalex/selfcheck.hpp"

#include <algorithm>
#include <random>

#include "braidalex/alexander.hpp"
#include "braidalex/fox.hpp"

namespace braidalex::selfcheck {

namespace {

using Rng = std::mt19937_64;

int rand_int(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

int rand_sign(Rng& rng) { return rng() % 2 ? +1 : -1; }

BraidWord random_word(Rng& rng, int strands, int max_len) {
    BraidWord w;
    w.strands = strands;
    int len = strands < 2 ? 0 : rand_int(rng, 0, max_len);
    for (int r = 0; r < len; ++r)
        w.letters.push_back({rand_int(rng, 1, strands - 1), rand_sign(rng)});
    return w;
}

// Classical single-variable reduced Burau matrix at t = t1, built directly
// from the generator formulas; deliberately does not go through
// undercrossing_labels or c_matrix.
PolyMatrix standard_reduced_burau(const BraidWord& w) {
    const int n = w.strands;
    const LaurentPoly t = LaurentPoly::variable(VarId::t(1));
    const LaurentPoly tinv = LaurentPoly::variable(VarId::t(1), -1);
    PolyMatrix m = PolyMatrix::identity(n - 1);
    for (const BraidLetter& letter : w.letters) {
        PolyMatrix g = PolyMatrix::identity(n - 1);
        const int r = letter.index - 1;
        if (letter.sign > 0) {
            if (r > 0) g.at(r, r - 1) = t;
            g.at(r, r) = -t;
            if (r + 1 < n - 1) g.at(r, r + 1) = LaurentPoly(1);
        } else {
            if (r > 0) g.at(r, r - 1) = LaurentPoly(1);
            g.at(r, r) = -tinv;
            if (r + 1 < n - 1) g.at(r, r + 1) = tinv;
        }
        m = m * g;
    }
    return m;
}

template <typename Trial>
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int trials, Trial&& trial) {
    SuiteResult result;
    result.name = name;
    result.trials = trials;
    Rng rng(seed);
    for (int i = 0; i < trials; ++i) {
        bool ok = false;
        try {
            ok = trial(rng);
        } catch (...) {
            ok = false;
        }
        if (!ok) ++result.failures;
    }
    return result;
}

}  // namespace

SuiteResult burau_collapse(std::uint64_t seed, int trials) {
    return run_suite("burau-collapse", seed, trials, [](Rng& rng) {
        int n = rand_int(rng, 2, 6);
        BraidWord w = random_word(rng, n, 20);
        std::map<VarId, VarId> all_to_t1;
        for (int j = 1; j <= n; ++j) all_to_t1[VarId::t(j)] = VarId::t(1);
        return substitute(coloured_burau(w).matrix, all_to_t1) == standard_reduced_burau(w);
    });
}

SuiteResult braid_relations(std::uint64_t seed, int trials) {
    return run_suite("braid-relations", seed, trials, [](Rng& rng) {
        int n = rand_int(rng, 3, 5);
        BraidWord base = random_word(rng, n, 8);
        int i = rand_int(rng, 1, n - 2);
        std::size_t pos = rng() % (base.length() + 1);
        BraidWord w1 = base, w2 = base;
        auto at1 = w1.letters.begin() + static_cast<std::ptrdiff_t>(pos);
        w1.letters.insert(at1, {{i, +1}, {i + 1, +1}, {i, +1}});
        auto at2 = w2.letters.begin() + static_cast<std::ptrdiff_t>(pos);
        w2.letters.insert(at2, {{i + 1, +1}, {i, +1}, {i + 1, +1}});
        return units_equal(axis_link_polynomial(w1), axis_link_polynomial(w2));
    });
}

SuiteResult far_commutation(std::uint64_t seed, int trials) {
    return run_suite("far-commutation", seed, trials, [](Rng& rng) {
        int n = rand_int(rng, 4, 6);
        BraidWord base = random_word(rng, n, 8);
        int i = rand_int(rng, 1, n - 3);
        int j = rand_int(rng, i + 2, n - 1);
        BraidLetter a{i, rand_sign(rng)};
        BraidLetter b{j, rand_sign(rng)};
        std::size_t pos = rng() % (base.length() + 1);
        BraidWord w1 = base, w2 = base;
        w1.letters.insert(w1.letters.begin() + static_cast<std::ptrdiff_t>(pos), {a, b});
        w2.letters.insert(w2.letters.begin() + static_cast<std::ptrdiff_t>(pos), {b, a});
        return units_equal(axis_link_polynomial(w1), axis_link_polynomial(w2));
    });
}

SuiteResult markov_conjugation(std::uint64_t seed, int trials) {
    return run_suite("markov-conjugation", seed, trials, [](Rng& rng) {
        int n = rand_int(rng, 2, 4);
        BraidWord w = random_word(rng, n, 8);
        BraidLetter g{rand_int(rng, 1, n - 1), rand_sign(rng)};

        BraidWord conj;
        conj.strands = n;
        conj.letters.push_back(g);
        conj.letters.insert(conj.letters.end(), w.letters.begin(), w.letters.end());
        conj.letters.push_back({g.index, -g.sign});

        // conjugation relabels the closure's components through pi_g: the
        // cycle C of pi_w becomes pi_g(C), so its variable t_{min pi_g(C)}
        // in the conjugate corresponds to t_{min C} in w
        BraidWord just_g;
        just_g.strands = n;
        just_g.letters.push_back(g);
        Permutation pi_g = permutation_of(just_g);

        std::map<VarId, VarId> rename;
        for (const auto& cycle : components_of(permutation_of(w))) {
            int image_min = n + 1;
            for (int c : cycle) image_min = std::min(image_min, pi_g(c));
            rename[VarId::t(image_min)] = VarId::t(cycle.front());
        }
        return units_equal(substitute(axis_link_polynomial(conj), rename),
                           axis_link_polynomial(w));
    });
}

SuiteResult markov_stabilization(std::uint64_t seed, int trials) {
    return run_suite("markov-stabilization", seed, trials, [](Rng& rng) {
        int n = rand_int(rng, 2, 4);
        BraidWord w = random_word(rng, n, 8);
        BraidWord stabilized;
        stabilized.strands = n + 1;
        stabilized.letters = w.letters;
        stabilized.letters.push_back({n, rand_sign(rng)});
        return units_equal(alexander_polynomial(w), alexander_polynomial(stabilized));
    });
}

SuiteResult oracle_agreement(std::uint64_t seed, int trials) {
    return run_suite("oracle-agreement", seed, trials, [](Rng& rng) {
        int n = rand_int(rng, 2, 4);
        BraidWord w = random_word(rng, n, 10);
        return units_equal(oracle_axis_polynomial(w), axis_link_polynomial(w));
    });
}

SuiteResult torres_divisibility(std::uint64_t seed, int trials) {
    return run_suite("torres-divisibility", seed, trials, [](Rng& rng) {
        int n = rand_int(rng, 2, 5);
        BraidWord w = random_word(rng, n, 10);
        try {
            alexander_invariant(w);
            alexander_polynomial(w);
            oracle_axis_polynomial(w);
        } catch (const DivisibilityFailure&) {
            return false;
        }
        return true;
    });
}

SuiteResult fox_fundamental_formula(std::uint64_t seed, int trials) {
    return run_suite("fox-fundamental-formula", seed, trials, [](Rng& rng) {
        const int symbols = 5;
        PhiMap phi;
        for (int s = 0; s < symbols; ++s) {
            VarId v = rng() % 5 == 0 ? VarId::axis() : VarId::t(rand_int(rng, 1, 4));
            phi.emplace(s, LaurentPoly::variable(v, rand_sign(rng)));
        }
        FreeWord w;
        int len = rand_int(rng, 0, 16);
        for (int i = 0; i < len; ++i) w.append(rand_int(rng, 0, symbols - 1), rand_sign(rng));

        LaurentPoly lhs = phi_eval(w, phi) - LaurentPoly(1);
        LaurentPoly rhs;
        for (int g = 0; g < symbols; ++g)
            rhs += fox_derivative_eval(w, g, phi) * (phi.at(g) - LaurentPoly(1));
        return lhs == rhs;
    });
}

std::vector<SuiteResult> run_all(std::uint64_t seed, int trials) {
    return {
        burau_collapse(seed, trials),        braid_relations(seed, trials),
        far_commutation(seed, trials),       markov_conjugation(seed, trials),
        markov_stabilization(seed, trials),  oracle_agreement(seed, trials),
        torres_divisibility(seed, trials),   fox_fundamental_formula(seed, trials),
    };
}

}  // namespace braidalex::selfcheck
