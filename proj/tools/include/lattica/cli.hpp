#ifndef LATTICA_CLI_HPP_
#define LATTICA_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace lattica::cli {

enum ExitCode : int { ok = 0, failed = 1, usage = 2, guard = 3 };

/// Runs one command. `args` excludes the program name. Results go to `out`
/// (or the -o file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lattica::cli

#endif  // LATTICA_CLI_HPP_
