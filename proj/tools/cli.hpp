#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qrf::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailure = 1, kUsageError = 2 };

// Runs one command. `args` excludes the program name. Reports go to `out`
// (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrf::cli
