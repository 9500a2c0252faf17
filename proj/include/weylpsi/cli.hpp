#pragma once

// Command-line front end: psi, spectrum, kac-reduce, table, verify,
// good-check, identify, order.

#include <iosfwd>
#include <vector>
#include <string>

namespace weylpsi {

enum ExitCode { exit_ok = 0, exit_diff = 1, exit_usage = 2 };

/// argv[0] is the program name. Output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace weylpsi
