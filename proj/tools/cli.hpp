#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fbc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs `torus <args...>` (args excludes the program name). Normal output
/// goes to `out` unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fbc::cli
