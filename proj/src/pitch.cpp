#include "tuning/pitch.hpp"

#include "tuning/errors.hpp"

#include <cmath>

namespace tuning {

namespace mp = boost::multiprecision;

namespace {

// Moves the integer part of `exponent` into `coefficient`.
void fold(Rational& coefficient, Rational& exponent) {
  const BigInt whole = exponent.floor();
  if (whole == 0) return;
  exponent -= Rational(whole);
  const auto shift = static_cast<unsigned>(mp::abs(whole));
  if (whole > 0) {
    coefficient *= Rational(BigInt(1) << shift);
  } else {
    coefficient /= Rational(BigInt(1) << shift);
  }
}

}  // namespace

Pitch::Pitch(const Rational& r) : coefficient_(r), exponent_(0) {
  if (!r.is_positive()) throw DomainError("pitch must be positive, got " + r.str());
}

Pitch::Pitch(const EtPitch& p) : coefficient_(1), exponent_(p.exponent()) {
  fold(coefficient_, exponent_);
}

Pitch::Pitch(const Rational& coefficient, const Rational& exponent)
    : coefficient_(coefficient), exponent_(exponent) {
  if (!coefficient.is_positive()) {
    throw DomainError("pitch must be positive, got coefficient " + coefficient.str());
  }
  fold(coefficient_, exponent_);
}

const Rational& Pitch::as_rational() const {
  if (!is_rational()) throw DomainError("pitch " + str() + " is irrational");
  return coefficient_;
}

double Pitch::to_double() const {
  return coefficient_.to_double() * std::exp2(exponent_.to_double());
}

Cents Pitch::cents() const {
  return {tuning::cents(coefficient_).value + 1200.0 * exponent_.to_double()};
}

Pitch Pitch::reciprocal() const { return Pitch(coefficient_.reciprocal(), -exponent_); }

std::string Pitch::decimal(int digits) const {
  if (is_rational()) return to_decimal(coefficient_, digits);
  // floor(c 2^(p/q) 10^d) = floor((c^q 2^p 10^(d q))^(1/q)), 0 < p < q.
  const auto q = static_cast<unsigned>(exponent_.den());
  const auto p = static_cast<unsigned>(exponent_.num());
  BigInt num = mp::pow(coefficient_.num(), q) * mp::pow(BigInt(10), static_cast<unsigned>(digits) * q);
  num <<= p;
  const BigInt den = mp::pow(coefficient_.den(), q);
  return format_scaled(integer_nth_root(num / den, q), digits, false);
}

std::string Pitch::str() const {
  if (is_rational()) return coefficient_.str();
  std::string power = "2^(" + exponent_.str() + ")";
  if (coefficient_ == Rational(1)) return power;
  return coefficient_.str() + "*" + power;
}

Pitch operator*(const Pitch& a, const Pitch& b) {
  return Pitch(a.coefficient_ * b.coefficient_, a.exponent_ + b.exponent_);
}

Pitch operator/(const Pitch& a, const Pitch& b) { return a * b.reciprocal(); }

std::strong_ordering operator<=>(const Pitch& a, const Pitch& b) {
  if (a.exponent_ == b.exponent_) return a.coefficient_ <=> b.coefficient_;
  // a ? b  <=>  ca/cb ? 2^(p/q)  <=>  (ca/cb)^q ? 2^p
  const Rational rho = a.coefficient_ / b.coefficient_;
  const Rational d = b.exponent_ - a.exponent_;
  const auto q = static_cast<unsigned>(d.den());
  BigInt lhs = mp::pow(rho.num(), q);
  BigInt rhs = mp::pow(rho.den(), q);
  const BigInt p = d.num();
  if (p >= 0) {
    rhs <<= static_cast<unsigned>(p);
  } else {
    lhs <<= static_cast<unsigned>(-p);
  }
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace tuning
