#ifndef HPATH_CLI_COMMANDS_HPP
#define HPATH_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hpath::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInput = 1,
    kExitCounterexample = 2,
    kExitVerify = 3,
};

// Entry point of the hpart tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hpath::cli

#endif // HPATH_CLI_COMMANDS_HPP
