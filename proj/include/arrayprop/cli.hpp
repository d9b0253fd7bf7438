#ifndef ARRAYPROP_CLI_HPP
#define ARRAYPROP_CLI_HPP

#include <ostream>

namespace arrayprop {

/// Exit codes shared by every command.
enum ExitCode : int {
    exit_ok = 0,      // stable / solved / no divergence
    exit_failure = 1, // propagation failure, no solution, or divergence
    exit_input = 2,   // unreadable, unparsable or invalid input
};

/// Entry point of the `arrayprop` tool, with injectable streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace arrayprop

#endif
