#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace interlock {

/// Exit statuses of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitAnalysis = 1, kExitUsage = 2 };

/// Runs the command line `args` (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace interlock
