#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace powerfree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. args excludes the program name. POWERFREE_CAP, when
/// set, replaces the default generation cap.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace powerfree::cli
