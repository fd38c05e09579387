#include "braidalex/cli.hpp"

#include <ostream>

#include "braidalex/fox.hpp"
#include "braidalex/selfcheck.hpp"

namespace braidalex {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240901;

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    BraidWord w;
    try {
        w = parse_word(config.word, config.strands);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    try {
        LinkInvariantReport report = full_report(w);
        if (config.oracle_check) {
            LaurentPoly oracle = oracle_axis_polynomial(w);
            if (!units_equal(oracle, report.with_axis)) {
                err << "error: oracle disagreement: pipeline gives "
                    << to_string(report.with_axis) << ", Fox calculus gives "
                    << to_string(oracle) << "\n";
                return 2;
            }
        }
        out << render(report, config.format, config.mode) << "\n";
        return 0;
    } catch (const DivisibilityFailure& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

int run_selftest(const CliConfig& config, std::ostream& out) {
    std::uint64_t seed = config.seed.value_or(kDefaultSeed);
    bool all_passed = true;
    for (const auto& result : selfcheck::run_all(seed, config.trials)) {
        out << (result.passed() ? "PASS" : "FAIL") << " " << result.name << ": "
            << result.trials << " trials, " << result.failures << " failures\n";
        all_passed = all_passed && result.passed();
    }
    out << (all_passed ? "selftest passed" : "selftest FAILED") << " (seed " << seed
        << ", " << config.trials << " trials per suite)\n";
    return all_passed ? 0 : 2;
}

}  // namespace braidalex
