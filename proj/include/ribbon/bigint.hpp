#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ribbon {

// Exact arbitrary-precision integer used for all polynomial coefficients,
// counts and character values.
using Int = boost::multiprecision::cpp_int;

}  // namespace ribbon
