#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace horadam::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_validation = 1,
  exit_usage = 2,
  exit_convergence = 3,
};

/// args excludes the program name. Results go to `out` (or --output),
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace horadam::cli
