#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gmm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitUsage = 64;
// A failed internal consistency check; always a bug.
inline constexpr int kExitInternal = 70;

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gmm::cli
