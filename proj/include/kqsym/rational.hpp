#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kqsym {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace kqsym
