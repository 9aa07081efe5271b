#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace griess::cli {

enum ExitCode { ok = 0, verification_failed = 1, usage_error = 2 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace griess::cli
