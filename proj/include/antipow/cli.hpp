#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace antipow::cli {

/// Process exit codes shared by every command.
enum ExitCode : int {
    kSuccess = 0,
    kDomainViolation = 1,   // additivity precheck failed, avoidance failed
    kUsage = 2,             // bad flags, unparsable instructions, out-of-range values
    kVerificationFailure = 3,
};

/// Runs one command line (args excludes the program name). Results go to `out`
/// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace antipow::cli
