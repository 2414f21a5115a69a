#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chordiv::cli {

enum ExitCode : int { kOk = 0, kUsageError = 2, kMathError = 3, kIoError = 4 };

/// Runs one command line. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chordiv::cli
