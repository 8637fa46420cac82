#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace optact::cli {

enum ExitCode : int {
    kOk = 0,
    kNumericalFailure = 1,
    kUsageError = 2,
};

/// Runs one command line (program name excluded), writing the report to
/// `out` and JSON error objects to `err`. Returns the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace optact::cli
