#pragma once

#include <ostream>

namespace k3deg::cli {

/// Exit codes: 0 pass, 1 domain failure, 2 input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace k3deg::cli
