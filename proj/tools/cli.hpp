#ifndef THOMPSON_TOOLS_CLI_HPP
#define THOMPSON_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace thompson::cli {

/// Runs the command line `args` (without the program name). Returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thompson::cli

#endif  // THOMPSON_TOOLS_CLI_HPP
