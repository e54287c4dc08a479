#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pauli_fwht::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDataError = 1,
  kUsageError = 2,
  kVerifyFailed = 3,
};

/// Runs the command line `args` (args[0] is the program name). Diagnostics go
/// to `err`, reports to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pauli_fwht::cli
