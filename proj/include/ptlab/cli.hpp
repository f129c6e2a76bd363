#pragma once

#include <iosfwd>

namespace ptlab::cli {

// Exit status: 0 all checks pass, 2 a mathematical disagreement, 1 usage or
// resource error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ptlab::cli
