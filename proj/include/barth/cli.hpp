#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace barth {

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_hypothesis = 2,
  exit_suite_failure = 3,
};

/// Runs one CLI invocation. `args` excludes the program name. Normal output
/// goes to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Logs to stderr; level from SPDLOG_LEVEL (default: warn).
void init_logging();

} // namespace barth
