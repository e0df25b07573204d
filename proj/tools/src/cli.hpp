#pragma once

#include <ostream>

namespace supermod::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a hypothesis or verdict failed
inline constexpr int kExitUsage = 2;    // bad arguments, unreadable or malformed input

// Commands: check, equilibria, verify, gallery. See `supermod --help`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace supermod::cli
