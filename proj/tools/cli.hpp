#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringnim::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;   // verify found disagreements
inline constexpr int kUsage = 2;      // bad flags, position text or ids
inline constexpr int kBudget = 3;     // solve budget exceeded
inline constexpr int kFailure = 4;    // anything else

/// Runs the ringnim command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace ringnim::cli
