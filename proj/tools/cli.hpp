#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace glat::cli {

// Runs the command line given as argv[1..] and writes the report to `out`
// (or the --out file). Returns the process exit code: 0 pass/success, 1 a
// failed claim check (counterexample found), 2 usage error, 3 invalid
// input, 4 cap exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace glat::cli
