#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slepnet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;

// Runs one `slepnet` invocation. args excludes the program name. Errors are
// printed to `err` as a single line starting with "error:".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slepnet::cli
