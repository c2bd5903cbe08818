#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "hallwheels/error.hpp"

namespace hallwheels {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponents of monomials and coordinates of lattice points.
using Exponent = std::int64_t;

inline Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw InvalidArgument("exponent overflow in addition");
  }
  return r;
}

inline Exponent checked_mul(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw InvalidArgument("exponent overflow in multiplication");
  }
  return r;
}

inline Exponent to_exponent(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<Exponent>::max()) ||
      v < BigInt(std::numeric_limits<Exponent>::min())) {
    throw InvalidArgument("integer does not fit an exponent: " + v.str());
  }
  return static_cast<Exponent>(v);
}

/// "p/q" with q > 0, always both parts.
inline std::string format_rational(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

/// Shortest form: "p" when integral, else "p/q".
inline std::string format_rational_short(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    return boost::multiprecision::numerator(r).str();
  }
  return format_rational(r);
}

inline bool is_integral(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("malformed rational '" + text + "'");
  }
}

/// Floor modulus into [0, m) for m > 0.
inline BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace hallwheels
