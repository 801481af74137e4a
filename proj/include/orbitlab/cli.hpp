#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orbitlab::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kUsageError = 2,
  kInternalError = 3,
};

/// Runs the command line `args` (args[0] is the program name). Output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbitlab::cli
