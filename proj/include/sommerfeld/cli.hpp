#pragma once

#include <ostream>
#include <span>
#include <string>

namespace sommerfeld::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDomainError = 2,
  kValidationFailed = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`, unless --out redirects the results to a file.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sommerfeld::cli
