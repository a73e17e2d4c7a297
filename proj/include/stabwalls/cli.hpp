#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stabwalls {

/// Exit codes of the stabwalls tool.
enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kFailedCheck = 3 };

/// Runs one command line (without the program name). JSON results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace stabwalls
