#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ebetti {

/// Runs the command-line front end. `args` excludes the program name.
/// Exit codes: 0 success (and engine agreement), 2 input error, 3 engine
/// mismatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ebetti
