#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ybe::cli {

// Exit codes: 0 all checks pass or are reported, 1 some check fails, 2 invalid input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ybe::cli
