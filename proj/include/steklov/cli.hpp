#pragma once

#include <iosfwd>

namespace steklov::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;     // bad arguments or unparsable tree text
inline constexpr int kDomain = 2;    // input outside a supported case (e.g. even D for classify)
inline constexpr int kMismatch = 3;  // a verification came back mismatch / fail
inline constexpr int kInternal = 4;  // numerical failure or broken internal invariant

/// Runs one subcommand. Never calls exit(); all output goes to `out`/`err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace steklov::cli
