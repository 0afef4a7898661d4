#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fusion {

// Multiplicities and dimensions. Free-product and word-ring coefficients grow
// without bound, so these never overflow.
using Natural = boost::multiprecision::cpp_int;

inline std::string to_string(Natural const& n) { return n.str(); }

// Parses a decimal string of digits; throws std::invalid_argument otherwise.
Natural parse_natural(std::string_view text);

}  // namespace fusion
