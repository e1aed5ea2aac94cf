#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace monocurve::cli {

enum ExitCode : int { ok = 0, internal = 1, input = 2, mismatch = 3 };

/// Runs the command line `args` (without the program name), writing to `out`
/// and `err`, and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splits tokens on commas and whitespace; a "C(...)" wrapper is accepted.
std::vector<std::int64_t> parse_generators(const std::vector<std::string>& tokens);

}  // namespace monocurve::cli
