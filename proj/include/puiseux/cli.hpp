#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace puiseux {

// Exit codes of the command-line front end.
inline constexpr int kExitDefinite = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitUndecided = 2;

inline constexpr std::int64_t kDefaultBudget = 1'000'000;

// Runs one invocation. args excludes the program name. A spec path of "-"
// reads `in`. Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace puiseux
