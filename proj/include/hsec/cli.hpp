#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hsec {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitClaimFailure = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hsec
