#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptdt::cli {

enum ExitCode : int { ok = 0, usage = 2, no_convergence = 3, invariant_failure = 4 };

// Runs one command line. The report goes to `out`; diagnostics and wall time go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptdt::cli
