#ifndef TRAINTRACK_CLI_COMMANDS_HPP
#define TRAINTRACK_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace traintrack::cli
{

enum ExitCode : int
{
    exit_pass = 0,
    exit_failure = 1,
    exit_usage = 2,
};

/// Parses and runs one invocation; `args` excludes the program name. Only
/// ever returns 0, 1 or 2.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace traintrack::cli

#endif
