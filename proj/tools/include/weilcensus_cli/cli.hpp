#pragma once

#include <iosfwd>

namespace weilcensus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitRefusal = 2;

/// Parses argv and runs one subcommand. Results go to out (or to --out files),
/// diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace weilcensus::cli
