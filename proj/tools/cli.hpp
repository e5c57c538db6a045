#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orthodeg::cli {

enum ExitCode : int { kOk = 0, kInternalFailure = 1, kUsage = 2 };

/// Runs one command; args excludes the program name. Structured output goes
/// to `out`, usage text and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orthodeg::cli
