#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mideal::cli {

enum ExitCode : int { kSuccess = 0, kViolation = 1, kUsage = 2, kIndeterminate = 3 };

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mideal::cli
