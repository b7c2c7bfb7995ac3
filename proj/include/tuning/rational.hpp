#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * Values are always stored in lowest terms with a positive denominator;
 * zero is 0/1. Pitch ratios are the positive subset, but intermediate
 * arithmetic (differences such as 2a - b) needs the full field, so the
 * sign lives in the numerator.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace tuning {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(implicit)
  Rational(BigInt n, BigInt d);
  Rational(std::int64_t n, std::int64_t d) : Rational(BigInt(n), BigInt(d)) {}

  /// Parses "p/q" or "p". Throws DomainError on malformed input or q = 0.
  static Rational parse(std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_positive() const noexcept { return num_ > 0; }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_.sign(); }

  Rational reciprocal() const;
  Rational abs() const;
  /// Integer power; negative exponents invert (zero base with negative exponent throws).
  Rational pow(std::int64_t e) const;
  /// Largest integer not greater than the value.
  BigInt floor() const;

  double to_double() const;
  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;
  /// Always "p/q", including "1/1" and "2/1" (tuning-file convention).
  std::string ratio_str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(BigInt(-a.num_), a.den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Base-2 logarithm of a positive big integer, accurate to double precision.
double log2_of(const BigInt& v);

}  // namespace tuning
