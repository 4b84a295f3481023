#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lyubgraph::cli {

/// Exit codes shared by all subcommands.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInputError = 2,
};

/// Runs the command line `args` (args[0] is the program name) and writes to
/// the given streams. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lyubgraph::cli
