#pragma once

#include <ostream>

namespace riesz::cli {

// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

// Parses argv (argv[0] is the program name), runs the subcommand and writes
// its table to --out or `out`. Diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace riesz::cli
