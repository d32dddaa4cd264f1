#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace anyon {

/// Exit codes of the `anyon` tool.
enum ExitCode : int {
    kExitOk = 0,
    /// Usage, I/O or parse failure.
    kExitUsage = 1,
    /// A model failed validation or a physics check failed.
    kExitCheckFailed = 2,
};

/// Runs `anyon <args...>` in-process. `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace anyon
