#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sbx {

// Full command-line surface. args excludes the program name. Returns the
// process exit code: 0 success, 1 invariant violation or oracle mismatch,
// 2 malformed input or unusable command line.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sbx
