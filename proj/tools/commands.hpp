#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bohr::cli {

/// Exit codes of the `bohr` tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_failed = 1,   ///< verify found failing suites
    exit_usage = 2,    ///< bad flags or inadmissible parameters
    exit_solver = 3,   ///< bracketing or iteration failure
    exit_mismatch = 4, ///< table entries differ from the reference values
};

/// Run the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bohr::cli
