#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edgelease::cli {

// Exit codes: 0 success, 1 input error, 2 validation failure, 3 infeasible.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitInfeasible = 3;

// Full CLI entry point, testable in-process. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace edgelease::cli
