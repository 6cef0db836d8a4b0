#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace psc::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;         // bad arguments or unknown preset
inline constexpr int kNotCertified = 2;  // weight bound too small
inline constexpr int kCheckFailed = 3;   // a yes/no check answered no

// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psc::cli
