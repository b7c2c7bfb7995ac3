#pragma once

// Octave reduction, integer roots and perfect powers, decimal and cents
// rendering for exact ratios.

#include "tuning/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace tuning {

/// Logarithmic interval size; 1200 per octave.
struct Cents {
  double value = 0.0;

  friend auto operator<=>(const Cents&, const Cents&) = default;
};

/// Result of octave reduction: value = input * 2^shift with 1 <= value < 2.
struct OctaveReduction {
  Rational value;
  std::int64_t shift = 0;
};

OctaveReduction reduce_to_octave_with_shift(const Rational& r);

/// r * 2^t for the unique integer t with 1 <= result < 2. Throws DomainError for r <= 0.
Rational reduce_to_octave(const Rational& r);

/// floor(x^(1/n)) for x >= 0, n >= 1, in pure integer arithmetic.
BigInt integer_nth_root(const BigInt& x, unsigned n);

/// Root `a` with a^n == m exactly, or nullopt. Requires m >= 1, n >= 2.
std::optional<BigInt> perfect_nth_root(const BigInt& m, unsigned n);

bool is_perfect_nth_power(const BigInt& m, unsigned n);

/// True iff the n-th root of m is irrational, i.e. m is not a perfect n-th
/// power. Requires m >= 2, n >= 2.
bool is_nth_root_irrational(const BigInt& m, unsigned n);

/// Truncated decimal expansion with `digits` fraction digits. Expansions
/// that terminate within `digits` are printed in full without padding.
std::string to_decimal(const Rational& r, int digits);

/// Truncated decimal padded to exactly `digits` fraction digits.
std::string to_fixed(const Rational& r, int digits);

/// Same rendering as to_decimal for an already scaled value
/// floor(x * 10^digits); `exact` says whether the scaling was lossless.
std::string format_scaled(const BigInt& scaled, int digits, bool exact);

Cents cents(const Rational& r);
Cents cents(double ratio);

}  // namespace tuning
