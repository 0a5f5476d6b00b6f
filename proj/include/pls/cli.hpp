#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pls::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,           // feasible / valid / equivalent
    kNegative = 1,     // infeasible / invalid / mismatch found
    kUsage = 2,        // usage or I/O error
    kBudget = 3,       // oracle budget exceeded
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace pls::cli
