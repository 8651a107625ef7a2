#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cbs {

/// Process exit codes of the `cbs` tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitGuard = 3,
};

/// Runs the `cbs` command line with args (program name excluded), writing
/// records to out and diagnostics to err. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cbs
