#ifndef TC_CLI_HPP
#define TC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace tc::cli {

/// Command-line driver. `args` excludes the program name. Returns the exit
/// code: 0 success, 2 validation error, 3 numerical failure. All emission is
/// buffered and written only on success of the whole run (unless
/// --keep-going downgrades failed grid rows to nan).
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tc::cli

#endif
