#ifndef BCAPPROX_CLI_HPP
#define BCAPPROX_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace bc::cli
{

enum ExitCode : int {
    exit_ok = 0,
    exit_not_met = 1,
    exit_input = 2,
};

// Runs one job; args excludes the program name. Reports go to --out (or
// `out` when no file is given), structured error messages to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace bc::cli

#endif
