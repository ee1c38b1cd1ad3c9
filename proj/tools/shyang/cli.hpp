#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shyang::cli {

enum ExitCode : int {
  kPass = 0,
  kMathFailure = 2,
  kBudget = 3,
  kUsage = 4,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shyang::cli
