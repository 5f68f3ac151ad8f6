#pragma once

#include <iosfwd>

namespace cavjj {

// Exit codes: 0 ok, 1 unexpected failure, 2 usage, 3 domain, 4 numerical.
int run(int argc, const char* const* argv);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cavjj
