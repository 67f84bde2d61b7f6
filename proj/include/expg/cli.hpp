#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace expg {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitBudget = 2, kExitMismatch = 3 };

// Runs one command line (argv[0] included) and returns the exit status.
int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace expg
