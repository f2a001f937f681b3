#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tiltstab::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tiltstab::cli
