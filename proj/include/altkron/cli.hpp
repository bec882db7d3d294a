#pragma once

// Command-line front end. Every command prints one JSON report to `out`;
// diagnostics go to `err`. Exit codes: 0 all checks pass, 1 a check or a
// mathematical premise failed, 2 malformed input or usage.

#include <iosfwd>
#include <string>
#include <vector>

namespace altkron {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// argv without the program name.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace altkron
