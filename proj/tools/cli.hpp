#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quivergrass::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kNonPolynomial = 3,
  kTooLarge = 4,
  kVerificationFailure = 5,
  kOutOfScope = 6,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quivergrass::cli
