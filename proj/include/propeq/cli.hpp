#pragma once

#include <ostream>

namespace propeq::cli {

/// Exit codes: 0 success, 1 verification failure, 2 malformed input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace propeq::cli
