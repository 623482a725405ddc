#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sfrkit::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationError = 1,  ///< bad arguments, malformed scenario, invalid input
  kBranchError = 2,      ///< infeasible analytic branch or fit failure
};

/// Runs one CLI invocation. `args` excludes the program name. Artifacts go to
/// `--out` when given, otherwise to `out`; summaries and diagnostics go to `err`.
/// Nothing is written to the artifact destination unless the command succeeds.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker count for sweeps: SFRKIT_THREADS if set and positive, else hardware concurrency.
unsigned sweep_threads();

}  // namespace sfrkit::cli
