#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subiso {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitHard = 2;
inline constexpr int kExitMismatch = 3;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subiso
