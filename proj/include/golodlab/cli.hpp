#pragma once

#include <iosfwd>

namespace golod {

/// Exit codes: 0 verdict computed, 1 input error, 2 internal verification failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace golod
