#pragma once

#include <iosfwd>

namespace qmf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv and runs one subcommand.  Reports go to `out`, warnings and
/// errors to `err`.  Returns kExitOk, kExitFailure or kExitUsage.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qmf::cli
