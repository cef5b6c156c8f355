#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace parastab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace parastab
