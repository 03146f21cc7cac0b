#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace risr {

// Exit statuses of the command-line surface.
//   0  reachable / valid / yes
//   1  unreachable / invalid / no
//   2  usage or input error
//   3  resource limit exceeded
//   4  internal-consistency error
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace risr
