#ifndef MODCYCLE_CLI_HPP
#define MODCYCLE_CLI_HPP

#include <iosfwd>

namespace modcycle {

enum ExitCode : int {
    kExitPass = 0,
    kExitViolation = 1,
    kExitUsage = 2,
    kExitIndeterminate = 3,
};

/// Runs the command line `argv` (argv[0] is the program name) with the given
/// streams standing in for stdout, stderr and stdin.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace modcycle

#endif
