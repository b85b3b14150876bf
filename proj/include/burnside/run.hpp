#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace burnside {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitBudgetExceeded = 2,
    kExitMalformedInput = 3,
    kExitUsage = 64,
    kExitInternal = 70,
};

/// Runs one CLI invocation (args exclude the program name); reports go to
/// `out`, diagnostics to `err`. The process main() is a thin wrapper.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace burnside
