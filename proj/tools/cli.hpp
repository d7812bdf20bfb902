#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dorder::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kDegenerateLattice = 3,
  kNumerical = 4,
  kDegenerateDenominator = 5,
};

/// Runs one invocation. `args` excludes the program name. Everything the
/// command produces goes to `out` (or to --out / --eval-out files);
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dorder::cli
