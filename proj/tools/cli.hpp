#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zemor::cli {

enum ExitCode : int {
    kOk = 0,
    kMismatch = 1,     ///< verify: word does not evaluate to the matrix
    kUsage = 2,        ///< bad flags, composite modulus, malformed matrix or word
    kAttackFailed = 3, ///< retry budget or timeout exhausted
    kIoError = 4,
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zemor::cli
