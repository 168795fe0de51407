#pragma once

#include <iosfwd>

namespace zinc::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kFalse = 1,     // property false, element not in ZI, statement refuted
  kUsage = 2,     // bad flags, parse or semantic errors, bad element index
  kRefused = 3,   // a gate or the order ceiling refused the computation
  kInternal = 4,  // a result post-check failed
};

/// Runs one invocation. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zinc::cli
