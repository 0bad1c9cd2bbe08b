#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace itlog {

/// Exit codes of run_command.
enum ExitCode : int {
  kExitPass = 0,
  kExitVerdictFailed = 1,
  kExitError = 2,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns 0 iff every verdict passed and no error
/// occurred.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace itlog
