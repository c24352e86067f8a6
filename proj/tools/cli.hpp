#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simploc::cli {

/// Exit codes: 0 success / all verdicts true, 1 a checked verdict is false,
/// 2 bad input or usage.
enum ExitCode { kOk = 0, kFalse = 1, kInputError = 2 };

/// Runs one command line (args[0] is the program name). Reports go to `out`
/// unless --report is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace simploc::cli
