#pragma once

#include <iosfwd>

namespace critfix {

// exit codes: 0 success, 1 domain error, 2 usage error
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace critfix
