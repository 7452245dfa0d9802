#ifndef HYPFAM_CLI_HPP
#define HYPFAM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hypfam {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitBadInput = 2,
    kExitNotJacobiType = 3,
    kExitNoMatch = 4,
    kExitNotSeparable = 5,
};

/// Runs one command. args excludes the program name. The JSON or CSV document
/// goes to out, human-readable messages to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hypfam

#endif // HYPFAM_CLI_HPP
