#pragma once

#include <iosfwd>

namespace gq {

// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Upper bound for --order, --max-weight and --max-rank. Read from
// GROUNDEDQ_MAX_ORDER, default 64. A malformed value is a usage error.
int max_order_cap();

// Runs one command line. Results go to `out`; diagnostics and wall times go
// to `err`, so `out` is byte-identical between runs.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gq
