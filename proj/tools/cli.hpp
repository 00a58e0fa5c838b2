#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gkat::cli {

/// Exit codes: 0 every check passed, 1 something was refuted or failed,
/// 2 usage, load or unsupported-strategy error.
enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gkat::cli
