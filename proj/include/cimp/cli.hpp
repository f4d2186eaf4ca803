#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cimp {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitHolds = 0,    // entailed / is a model / success
    kExitFails = 1,    // not entailed / not a model
    kExitError = 2,    // bad input, I/O or configuration error
};

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cimp
