#pragma once

#include <ostream>

namespace polydig {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 2,
  kExitNumerical = 3,
  kExitQuarantine = 4,
};

// Entry point of the polydig tool with injectable output streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polydig
