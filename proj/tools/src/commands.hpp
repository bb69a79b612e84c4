#ifndef RVAR_CLI_COMMANDS_HPP
#define RVAR_CLI_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace rvar::cli {

/// Run the full command-line interface on the given arguments (without the
/// program name). Output and diagnostics go to the supplied streams. Returns
/// the process exit code: 0 success, 2 input parse error, 3 semantic or
/// configuration error, 4 numerical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace rvar::cli

#endif
