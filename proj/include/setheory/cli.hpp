#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace setheory {

enum ExitStatus : int {
  exit_ok = 0,            ///< satisfied / valid
  exit_not_satisfied = 1, ///< violations or undetermined mandatory rules
  exit_error = 2,         ///< usage, I/O, parse or schema error
};

/// Runs the command line `args` (args[0] is the program name). Results go
/// to `out`, diagnostics to `err`. A project file named "-" is read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// As above, reading "-" from standard input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace setheory
