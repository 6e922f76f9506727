#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace esa {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" with q > 0, always including the denominator ("3/1", "0/1").
std::string fraction_string(const Rational& r);

// "p" for integers, "p/q" otherwise.
std::string compact_string(const Rational& r);

// Accepts "p", "-p", "p/q" (q != 0). Throws ParseError.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

BigInt floor_of(const Rational& r);
BigInt ceil_of(const Rational& r);

inline Rational abs_of(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// 2^e as a big integer.
BigInt pow2(unsigned e);

}  // namespace esa
