#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brieskorn::cli {

// Runs the command line tool; returns the process exit code:
// 0 success, 1 invalid input, 2 internal consistency failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brieskorn::cli
