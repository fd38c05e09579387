#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Randomized consistency suites shared by the selftest subcommand and the
// acceptance tests. Every suite is deterministic in its seed.

namespace braidalex::selfcheck {

struct SuiteResult {
    std::string name;
    int trials = 0;
    int failures = 0;
    bool passed() const { return failures == 0; }
};

// Coloured Burau specialized at t1 = ... = tn = t equals an independently
// built standard reduced Burau matrix, entrywise. n <= 6, length <= 20.
SuiteResult burau_collapse(std::uint64_t seed, int trials);

// Replacing sigma_i sigma_{i+1} sigma_i by sigma_{i+1} sigma_i sigma_{i+1}
// leaves the axis polynomial unchanged.
SuiteResult braid_relations(std::uint64_t seed, int trials);

// Commuting sigma_i sigma_j for |i - j| >= 2 leaves the axis polynomial
// unchanged.
SuiteResult far_commutation(std::uint64_t seed, int trials);

// The axis polynomial of g w g^-1 matches that of w once the conjugation's
// relabelling of components is applied.
SuiteResult markov_conjugation(std::uint64_t seed, int trials);

// The Alexander polynomial survives stabilization w -> w sigma_n^{+/-1}.
SuiteResult markov_stabilization(std::uint64_t seed, int trials);

// The Fox-calculus oracle agrees with the coloured-Burau pipeline up to
// units. n <= 4, length <= 10.
SuiteResult oracle_agreement(std::uint64_t seed, int trials);

// The Torres quotients are exact: no DivisibilityFailure on random words.
SuiteResult torres_divisibility(std::uint64_t seed, int trials);

// phi(w) - 1 = sum_g phi(dw/dg) (phi(g) - 1) on random free words.
SuiteResult fox_fundamental_formula(std::uint64_t seed, int trials);

std::vector<SuiteResult> run_all(std::uint64_t seed, int trials);

}  // namespace braidalex::selfcheck
