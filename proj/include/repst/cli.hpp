#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace repst {

// Full command-line surface; returns the process exit code.
// 0 = success, 1 = computation refusal, 2 = usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace repst
