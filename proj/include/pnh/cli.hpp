#pragma once

#include <iosfwd>

namespace pnh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `pnh` command line.  Returns 0 on success, 1 when a verification
/// fails and 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace pnh::cli
