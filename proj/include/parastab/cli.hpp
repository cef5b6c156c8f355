#pragma once

#include <iosfwd>

namespace parastab {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitSemistable = 10;
inline constexpr int kExitUnstable = 11;

/// Runs the command-line front end; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace parastab
