#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recten {

/// Exit codes of the recten command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 2,
  kExitNumeric = 3,
  kExitCapacity = 4,
};

/// Runs one CLI invocation. `args` excludes the program name. Reports go to
/// `out` (or the --out file); failures write one machine-readable line
///   error: category=<validation|numeric|capacity> kind=<tag>
/// followed by a human-readable diagnostic to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace recten
