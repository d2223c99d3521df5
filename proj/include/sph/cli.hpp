#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sph {

// Exit codes of the command-line tool.
constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;  // a check evaluated to false
constexpr int kExitInput = 2;  // bad input, or a check whose hypothesis fails

// args excludes the program name. Reads SPH_Q_DEFAULT for the default
// specialization of q.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sph
