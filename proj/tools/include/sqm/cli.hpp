#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqm::cli {

// Exit codes: 0 checks passed or report only, 1 a checked invariant failed,
// 2 usage error. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

std::string version();

}  // namespace sqm::cli
