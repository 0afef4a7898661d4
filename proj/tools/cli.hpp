#pragma once

#include <iosfwd>

namespace fusion::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;     // NotNormal, NotCentral, axiom violations
inline constexpr int kInputError = 2;
inline constexpr int kCheckFailed = 3;  // --oracle-check or internal consistency

int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fusion::cli
