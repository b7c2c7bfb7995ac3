#pragma once

/**
 * @file pitch.hpp
 * @brief Exact pitch ratios covering both rational and equal-tempered values.
 *
 * A Pitch is c * 2^e with c a positive rational and e a rational exponent
 * in [0, 1). The integer part of any power-of-two exponent is folded into c,
 * which makes the form canonical: two pitches are equal iff both parts are
 * equal (2^e is irrational for non-integer e). Ordering is decided exactly by
 * raising both sides to the exponent's denominator.
 */

#include "tuning/et_scale.hpp"
#include "tuning/rational.hpp"
#include "tuning/ratio_core.hpp"

#include <compare>
#include <string>

namespace tuning {

class Pitch {
 public:
  /// Throws DomainError unless r > 0.
  Pitch(const Rational& r);  // NOLINT(implicit)
  Pitch(const EtPitch& p);   // NOLINT(implicit)
  Pitch(std::int64_t n) : Pitch(Rational(n)) {}  // NOLINT(implicit)
  /// coefficient * 2^exponent; throws DomainError unless coefficient > 0.
  Pitch(const Rational& coefficient, const Rational& exponent);

  const Rational& coefficient() const noexcept { return coefficient_; }
  /// Fractional power-of-two exponent, in [0, 1).
  const Rational& exponent() const noexcept { return exponent_; }

  bool is_rational() const noexcept { return exponent_.is_zero(); }
  /// The exact rational value; throws DomainError when the pitch is irrational.
  const Rational& as_rational() const;

  double to_double() const;
  Cents cents() const;
  Pitch reciprocal() const;
  /// Truncated decimal, exact for both rational and irrational pitches.
  std::string decimal(int digits) const;
  std::string str() const;

  friend Pitch operator*(const Pitch& a, const Pitch& b);
  friend Pitch operator/(const Pitch& a, const Pitch& b);
  friend bool operator==(const Pitch& a, const Pitch& b) = default;
  friend std::strong_ordering operator<=>(const Pitch& a, const Pitch& b);

 private:
  Rational coefficient_;
  Rational exponent_;
};

}  // namespace tuning
