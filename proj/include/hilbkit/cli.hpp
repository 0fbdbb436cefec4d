#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hilbkit {

enum ExitCode { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 when a mathematical check
/// fails, 2 on a usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilbkit
