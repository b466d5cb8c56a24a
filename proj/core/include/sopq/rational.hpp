#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace sopq {

/// Arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator. All arithmetic is exact.
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Renders a rational as "num/den", omitting "/den" when the denominator is 1.
inline std::string to_string(const Rational& q)
{
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += "/";
    s += denominator(q).str();
  }
  return s;
}

/// Parses the "num/den" format accepted by to_string.
inline Rational parse_rational(const std::string& s)
{
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("nonpositive denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

} // namespace sopq
