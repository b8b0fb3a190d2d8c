#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace padichg::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kPass = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kMathError = 3,
};

/// Runs one invocation. `args` excludes the program name. The payload goes to
/// `out`; CLI11 help and parse diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padichg::cli
