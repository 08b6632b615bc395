#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace freewitt::cli {

// Exit codes: 0 success, 1 I/O, parse or usage error, 2 domain error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace freewitt::cli
