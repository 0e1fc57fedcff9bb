#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace purebraid::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs one command line (without the program name).  Output is
/// deterministic for identical arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace purebraid::cli
