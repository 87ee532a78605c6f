#pragma once

#include <iosfwd>

namespace qfrob {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitPass = 0, kExitFailure = 1, kExitUsage = 2 };

/// Parses argv, runs the requested suite, writes the report to `out` and
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qfrob
