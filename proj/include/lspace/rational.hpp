#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lspace {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& r) {
  return boost::multiprecision::numerator(r);
}

inline Integer denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(Integer(num), Integer(den));
}

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

inline std::string to_string(const Integer& n) { return n.str(); }

/// Fixed-point decimal rendering, for display only.
inline std::string to_decimal(const Rational& r, int digits = 6) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Integer num = numerator_of(r) * scale;
  Integer den = denominator_of(r);
  bool negative = num < 0;
  if (negative) num = -num;
  Integer q = (2 * num + den) / (2 * den);  // round half up on |r|
  std::string whole = Integer(q / scale).str();
  std::string frac = Integer(q % scale).str();
  if (digits > 0) frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  std::string out = negative && q != 0 ? "-" : "";
  out += whole;
  if (digits > 0) out += "." + frac;
  return out;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace lspace
