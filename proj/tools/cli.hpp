#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rmga::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Data goes to `out`
/// unless --out-file is given; diagnostics go to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rmga::cli
