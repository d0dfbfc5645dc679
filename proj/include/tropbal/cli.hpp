#pragma once

#include <iosfwd>

namespace tropbal::cli {

/// Exit statuses shared by every verb.
enum ExitCode : int {
  kOk = 0,
  kUnbalanced = 1,  // input was checked and failed balancing
  kInvalid = 2,     // command line, parse or validation error
};

/// Runs one CLI invocation. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tropbal::cli
