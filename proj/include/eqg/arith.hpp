#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eqg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ErrorKind {
  parse,
  color_mismatch,
  empty_row,
  shape_mismatch,
  not_projective,
  bound_too_small,
  bound_too_large,
  index_out_of_range,
  size_overflow,
  missing_subprojectives,
  modulus_mismatch,
  odd_label,
  not_reachable,
  wrong_family,
  inconsistent_dimension,
  invalid_argument,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "ParseError";
    case ErrorKind::color_mismatch: return "ColorMismatch";
    case ErrorKind::empty_row: return "EmptyRow";
    case ErrorKind::shape_mismatch: return "ShapeMismatch";
    case ErrorKind::not_projective: return "NotProjective";
    case ErrorKind::bound_too_small: return "BoundTooSmall";
    case ErrorKind::bound_too_large: return "BoundTooLarge";
    case ErrorKind::index_out_of_range: return "IndexOutOfRange";
    case ErrorKind::size_overflow: return "SizeOverflow";
    case ErrorKind::missing_subprojectives: return "MissingSubprojectives";
    case ErrorKind::modulus_mismatch: return "ModulusMismatch";
    case ErrorKind::odd_label: return "OddLabel";
    case ErrorKind::not_reachable: return "NotReachable";
    case ErrorKind::wrong_family: return "WrongFamily";
    case ErrorKind::inconsistent_dimension: return "InconsistentDimension";
    case ErrorKind::invalid_argument: return "InvalidArgument";
  }
  return "Error";
}

/// Library error; `kind()` identifies the violated contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt gcd(BigInt a, BigInt b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Floor division (the quotient rounds toward negative infinity).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  BigInt r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

/// Returns g = gcd(a, b) >= 0 together with x, y such that a*x + b*y = g.
inline BigInt extended_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

inline std::string to_string(const BigInt& x) { return x.str(); }

/// "num/den" with den >= 1.
inline std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text.c_str()));
    BigInt num(text.substr(0, slash).c_str());
    BigInt den(text.substr(slash + 1).c_str());
    if (den == 0) throw Error(ErrorKind::parse, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error(ErrorKind::parse, "bad rational '" + text + "'");
  }
}

inline BigInt ipow(const BigInt& base, unsigned exponent) {
  BigInt result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace eqg
