#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "braidalex/render.hpp"

namespace braidalex {

struct CliConfig {
    int strands = 1;
    std::string word;
    Mode mode = Mode::all;
    Format format = Format::text;
    bool oracle_check = false;
    std::optional<std::uint64_t> seed;  // selftest only
    int trials = 100;                   // selftest only
};

// Parses the word, computes the report, renders it on out. Exit status:
// 0 success, 1 input error (diagnostic on err), 2 internal-consistency
// failure (Torres division not exact, or oracle disagreement under
// oracle_check).
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

// Runs the randomized suites, one result line per suite on out.
// Exit status 0 when every suite passes, 2 otherwise.
int run_selftest(const CliConfig& config, std::ostream& out);

}  // namespace braidalex
