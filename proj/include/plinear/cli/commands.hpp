#pragma once

#include <iosfwd>

namespace plinear {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

/// Runs `plinear <subcommand> ...` writing to the given streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace plinear
