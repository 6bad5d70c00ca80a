#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace schern {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& value) { return value.str(); }

inline BigInt parse_bigint(const std::string& text) { return BigInt(text); }

}  // namespace schern
