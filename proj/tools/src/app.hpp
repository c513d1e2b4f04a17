#pragma once

#include <iosfwd>

namespace gaussq::cli {

// Exit codes: 0 success, 1 computation or verification failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gaussq::cli
