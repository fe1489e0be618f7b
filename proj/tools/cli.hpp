#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace aperiodic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitWarning = 2;

// Runs one command line (args excludes the program name) and returns the
// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// The table printed at the end of --help.
std::string defaults_table();

}  // namespace aperiodic::cli
