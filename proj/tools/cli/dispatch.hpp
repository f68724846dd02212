#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace padicmech::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  /// A convergence restriction was violated; stderr names the condition.
  kDomainViolation = 2,
};

/// Runs one command line (without the program name). Tables go to `out` or
/// to --out; diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padicmech::cli
