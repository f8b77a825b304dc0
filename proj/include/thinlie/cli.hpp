#pragma once

#include <iosfwd>

namespace thinlie::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailure = 1,
  kUsage = 2,
  kBudget = 3,
  kConstruction = 4,
};

/// Entry point of the `thinlie` tool. Artifacts go to --out or `out`;
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace thinlie::cli
