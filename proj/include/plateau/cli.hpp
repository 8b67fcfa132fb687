#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace plateau {

// Runs the command-line surface in-process. Exit codes: 0 success,
// 2 precondition violation, 3 truncation-limit outcome, 4 oracle failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plateau
