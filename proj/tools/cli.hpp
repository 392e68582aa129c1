#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gsbs::cli {

enum ExitCode : int
{
  kOk = 0,
  kRefused = 1,
  kUsage = 2,
  kResource = 3,
};

/// Runs one invocation; args excludes the program name.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace gsbs::cli
