#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coinparadox::cli {

/// Exit codes: 0 success, 2 usage or validation error, 1 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace coinparadox::cli
