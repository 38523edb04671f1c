#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jordan {

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns 0 on success, 2 for bad usage or input, 3
/// when a cap is reached and 1 for other failures.
int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace jordan
