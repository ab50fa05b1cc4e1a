#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace capsid::cli {

// Runs one subcommand. `args` excludes the program name. Returns the process
// exit code: 0 on success, 1 for input or computation errors, 2 for usage
// errors. Errors are written to `err` as a single line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace capsid::cli
