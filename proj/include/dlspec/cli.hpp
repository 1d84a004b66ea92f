#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dlspec {

// Full command-line front end; returns the process exit code.
// 0 all pass, 1 any FAIL verdict, 2 any INCONCLUSIVE without FAIL,
// 3 usage or input error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dlspec
