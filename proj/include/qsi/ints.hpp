#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace qsi {

// All coefficient arithmetic is exact. Straightening coefficients are small
// but subduction and period computations overflow 64 bits quickly.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const Int& v) { return v.str(); }

inline Int int_from_decimal(const std::string& s) { return Int(s); }

}  // namespace qsi
