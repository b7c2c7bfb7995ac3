#pragma once

/**
 * @file et_scale.hpp
 * @brief Equal division of the octave.
 *
 * An equal-tempered pitch 2^(k/n) is irrational whenever n does not divide
 * k, so it is kept symbolically as the pair (k, n) and only rendered on
 * demand. Decimal rendering is done by exact integer root extraction, which
 * makes truncated digits independent of platform floating point.
 */

#include "tuning/rational.hpp"
#include "tuning/ratio_core.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tuning {

/// The ratio 2^(k/n). (k, n) and (k*t, n*t) are the same pitch; storage
/// keeps what the caller gave, comparisons reduce.
class EtPitch {
 public:
  EtPitch(std::int64_t k, std::int64_t n);

  std::int64_t k() const noexcept { return k_; }
  std::int64_t n() const noexcept { return n_; }

  /// The exponent k/n in lowest terms.
  Rational exponent() const { return Rational(k_, n_); }
  EtPitch reduced() const;

  bool is_rational() const noexcept { return k_ % n_ == 0; }
  double to_double() const;
  Cents cents() const;

  /// "2^(k/n)" using the stored (unreduced) pair; "1" for k = 0.
  std::string form() const;

  friend bool operator==(const EtPitch& a, const EtPitch& b) {
    return a.k_ * b.n_ == b.k_ * a.n_;
  }
  friend std::strong_ordering operator<=>(const EtPitch& a, const EtPitch& b) {
    return a.k_ * b.n_ <=> b.k_ * a.n_;
  }

 private:
  std::int64_t k_;
  std::int64_t n_;
};

/// 440 Hz on degree 9 (LA) of the DO-based twelve-division octave.
double default_base_hz();

struct EtScale {
  double base_hz = 0.0;
  std::int64_t n = 0;
  std::vector<EtPitch> pitches;  // k = 0..n

  double frequency(std::size_t index) const;
};

/// n + 1 pitches 2^(k/n), k = 0..n. Throws DomainError for n < 1.
EtScale generate_et(std::int64_t n, double base_hz = default_base_hz());

/// floor(2^(k/n) * 10^digits), exact.
BigInt et_scaled_floor(const EtPitch& p, int digits);

/// Truncated decimal of 2^(k/n) with `digits` fraction digits.
std::string et_value(const EtPitch& p, int digits);

/// Number of semitones between two chromatic indices, |i2 - i1|.
std::int64_t et_semitone_count(std::int64_t i1, std::int64_t i2);

/// Chromatic indices of the major diatonic scale, closing octave included.
inline constexpr int kDiatonicIndices[8] = {0, 2, 4, 5, 7, 9, 11, 12};

bool is_diatonic_index(int degree);

/// Degrees {0,2,4,5,7,9,11,12} of a twelve-division scale.
/// Throws UnsupportedDivisionError when scale.n != 12.
std::vector<EtPitch> diatonic_subset(const EtScale& scale);

}  // namespace tuning
