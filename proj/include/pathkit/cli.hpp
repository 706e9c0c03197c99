#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pathkit {

/// Exit codes: 0 success / true / pass, 1 false / fail, 2 usage or
/// validation error, 3 fuel or oracle budget exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathkit
