#include <CLI11.hpp>

#include <iostream>

#include "braidalex/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "braidalex: multivariable Alexander polynomials of closed braids\n"
        "via the coloured reduced Burau matrix and the Torres-Fox formula"};
    app.require_subcommand(0, 1);

    braidalex::CliConfig config;
    std::string mode = "all";
    std::string format = "text";
    auto* strands_opt = app.add_option("--strands", config.strands,
                                       "number of braid strands (>= 1)");
    app.add_option("--word", config.word,
                   "braid word: whitespace-separated signed generator indices, "
                   "top crossing first (e.g. \"1 -2 1\")");
    app.add_option("--mode", mode, "axis | invariant | alexander | all")
        ->check(CLI::IsMember({"axis", "invariant", "alexander", "all"}));
    app.add_option("--format", format, "text | json | latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    app.add_flag("--oracle-check", config.oracle_check,
                 "recompute the axis polynomial via Fox calculus and fail on disagreement");

    auto* selftest = app.add_subcommand("selftest", "run the randomized self-check suites");
    std::uint64_t seed = 0;
    auto* seed_opt = selftest->add_option("--seed", seed, "random seed (default fixed)");
    selftest->add_option("--trials", config.trials, "trials per suite")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // flag errors are input errors
    }

    if (selftest->parsed()) {
        if (seed_opt->count() > 0) config.seed = seed;
        return braidalex::run_selftest(config, std::cout);
    }

    if (strands_opt->count() == 0) {
        std::cerr << "error: --strands is required (see --help)\n";
        return 1;
    }
    if (config.strands < 1) {
        std::cerr << "error: --strands must be at least 1\n";
        return 1;
    }
    config.mode = braidalex::mode_from_string(mode);
    config.format = braidalex::format_from_string(format);
    return braidalex::run(config, std::cout, std::cerr);
}
