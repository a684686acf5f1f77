#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flatdelta::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNotRealizable = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInconsistent = 4;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flatdelta::cli
