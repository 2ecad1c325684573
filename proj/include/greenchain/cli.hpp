#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace greenchain {

/// Exit codes of the command line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitNumeric = 2 };

/// Runs the `greenchain` command line with args[0] as the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace greenchain
