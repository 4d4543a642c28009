#ifndef PALIMORPH_CLI_COMMANDS_HPP
#define PALIMORPH_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace palimorph::cli {

/// Runs one CLI invocation (argv without the program name) against the given
/// streams.  Exit codes: 0 success, 1 failed --assert, 2 bad input.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace palimorph::cli

#endif
