#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cremona {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,        // parse, parameter or validation error
  kExitNotBirational = 2,
  kExitTheoryViolation = 3,
};

/// Runs the CLI with args (program name excluded), writing reports to out
/// and diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cremona
