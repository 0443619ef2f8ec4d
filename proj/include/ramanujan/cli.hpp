#pragma once

#include <iosfwd>

namespace ramanujan {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitInconclusive = 3,
};

/// Entry point of the `ramanujan` command-line tool. Reports go to `out`,
/// diagnostics to `err`; the return value is the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ramanujan
