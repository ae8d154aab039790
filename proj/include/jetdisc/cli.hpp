#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "jetdisc/incidence.hpp"

namespace jetdisc::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kFailure = 2 };

/// Everything a command run depends on; identical configs give identical output.
struct RunConfig {
  std::string command;
  LinearSystemConfig config;
  int y_index = 0;
  int x_index = 0;
  std::uint64_t seed = 1;
  int samples = 20;
  std::string format;  // empty: the command's default
  std::size_t pair_limit = 100000;
  double timeout_seconds = 60;
};

/// Runs the command line `args` (program name excluded). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jetdisc::cli
