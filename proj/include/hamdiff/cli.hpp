#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hamdiff::cli {

enum ExitCode : int {
    kOk = 0,
    kConfigError = 2,
    kBudgetExhausted = 3,
    kVerificationFailed = 4,
};

/// Runs the command line `args` (without the program name), writing the
/// report to `out` (or --out) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hamdiff::cli
