#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fano64::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kMismatch = 2 };

/// Runs one invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fano64::cli
