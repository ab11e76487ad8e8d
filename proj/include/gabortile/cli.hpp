#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gabortile {

/// Exit codes: decided (including negative verdicts), bad input, inconclusive.
enum ExitCode : int { kExitOk = 0, kExitInputError = 2, kExitInconclusive = 3 };

/// Runs one command; args excludes the program name. JSON goes to `out`,
/// diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gabortile
