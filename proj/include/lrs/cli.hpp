#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lrs {

/// Exit codes of runCli.
enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitUsage = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out` or to the --output file; diagnostics go to `err`.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lrs
