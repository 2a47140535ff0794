// cli.hpp: otto-lgi command dispatch

#pragma once

#include <iosfwd>

namespace otto_lgi::cli {

// Exit codes
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_infeasible = 2;
inline constexpr int exit_oracle = 3;

// Oracle-check passes when the analytic and numeric correlators agree to this
// relative error.
inline constexpr double oracle_tolerance = 1e-5;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace otto_lgi::cli
