#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bandwidth::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int { kSuccess = 0, kNo = 1, kUnknown = 2, kError = 3 };

// Exit code for a report status: optimal/yes -> 0, no -> 1, unknown -> 2, anything else -> 3.
int exit_code_for(const std::string& status);

// Runs the command line (args excludes the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bandwidth::cli
