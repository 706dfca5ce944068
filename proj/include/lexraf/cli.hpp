#pragma once

#include <iosfwd>

namespace lexraf::cli {

/// Exit codes: 0 success / all checks pass, 1 a violation or a survivor set
/// other than {lex}, 2 bad input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lexraf::cli
