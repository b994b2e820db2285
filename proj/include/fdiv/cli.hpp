#pragma once

#include <iosfwd>

namespace fdivergence {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitBoundFailed = 1,
  kExitValidation = 2,
  kExitAbsoluteContinuity = 3,
  kExitNumerical = 4,
};

/// Entry point behind the `fdiv` binary; writes results to `out` and
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fdivergence
