#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bring::cli {

/// Exit codes: 0 success, 1 internal/numerical failure, 2 bad input
/// (flags, domain or divergence errors).
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// `out`, diagnostics to `err`; nothing is written to `out` on failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bring::cli
