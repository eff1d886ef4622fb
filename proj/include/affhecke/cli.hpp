#pragma once

#include <ostream>

namespace affhecke {

/// The `affhecke` command line. Returns 0 on success, 1 for input or
/// validation errors, 2 for internal invariant failures (and failed selftests).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace affhecke
