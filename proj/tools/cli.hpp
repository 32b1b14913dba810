#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leonard_lab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInconsistent = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitUsage = 64;

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leonard_lab::cli
