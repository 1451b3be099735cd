#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace moore::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUndecided = 2, kUsage = 64 };

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moore::cli
