#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace numsgp::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kUsageError = 2,
};

/// Runs one invocation. args excludes the program name. Results go to out,
/// diagnostics to err; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace numsgp::cli
