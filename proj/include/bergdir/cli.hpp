#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bergdir::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Runs the command line `args` (args[0] is the program name). Output is
/// written to `out` only after all flags validated and the computation
/// finished; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bergdir::cli
