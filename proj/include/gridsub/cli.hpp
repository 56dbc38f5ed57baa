#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gridsub {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int validation_failure = 1;
inline constexpr int budget_exceeded = 2;
inline constexpr int usage = 64;
}  // namespace exit_code

/// Runs the command line `args` (program name first), writing the report
/// document to `out` and diagnostics to `err`. Returns the exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gridsub
