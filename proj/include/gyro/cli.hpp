#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gyro::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kCapExceeded = 3,
};

/// Runs the command line `args` (without the program name). All output goes
/// to `out` / `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gyro::cli
