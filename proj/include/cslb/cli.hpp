#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cslb::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kSolverError = 2,
  kMcFailure = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Scientific notation with 9 significant digits, the CSV number format.
std::string sci(double v);

}  // namespace cslb::cli
