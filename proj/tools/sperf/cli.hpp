#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sperf::cli {

enum ExitCode : int { kHolds = 0, kFails = 1, kUsage = 2, kBudget = 3 };

// Entry point behind the sperf binary; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sperf::cli
