#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridcomm::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInputError = 1,
    kPreconditionViolation = 2,
    kComparisonFailed = 3,
};

/// Runs the command line `args` (args[0] is the program name). Results go
/// to `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gridcomm::cli
