#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polyunion::cli {

enum ExitCode : int {
  kPass = 0,
  kFailure = 1,
  kBadInput = 2,
};

/// polyunion <command> <target|suite> [--flag value]...
/// args[0] is the program name. Reports and summaries go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyunion::cli
