#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace invsum::cli {

enum ExitCode : int { ok = 0, violation = 1, usage = 2, ceiling = 3 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invsum::cli
