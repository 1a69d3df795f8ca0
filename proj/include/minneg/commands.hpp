#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minneg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;         // bad flags, unreadable or malformed input
inline constexpr int kExitInvalidState = 2;  // input is not a density matrix
inline constexpr int kExitCrossCheck = 3;    // the two negativity paths disagree

/// Parses and runs one subcommand (analyze, gen, sweep, bench, help).
/// Reports go to `out`, diagnostics to `err`; the return value is the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minneg::cli
