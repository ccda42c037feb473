#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dodgson::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternalError = 1;  // e.g. oracle disagreement
inline constexpr int kInputError = 2;
inline constexpr int kBudgetExceeded = 3;

// Runs one command. `args` excludes the program name. JSON results go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dodgson::cli
