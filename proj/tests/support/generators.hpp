#pragma once

// Hand-rolled generators for the randomized property suites. Seeds are
// fixed so failures reproduce.

#include "tuning/et_scale.hpp"
#include "tuning/monzo.hpp"
#include "tuning/pitch.hpp"
#include "tuning/rational.hpp"

#include <random>
#include <vector>

namespace testing_support {

inline constexpr int kPropertyCases = 1000;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  bool coin() { return integer(0, 1) == 1; }

  tuning::Monzo monzo(std::int64_t bound) {
    return {integer(-bound, bound), integer(-bound, bound), integer(-bound, bound)};
  }

  /// Positive rational with numerator and denominator in [1, max].
  tuning::Rational positive_rational(std::int64_t max = 1000) {
    return tuning::Rational(integer(1, max), integer(1, max));
  }

  /// Either a rational pitch or an equal-tempered one times a rational.
  tuning::Pitch pitch() {
    if (coin()) return tuning::Pitch(positive_rational(64));
    const std::int64_t n = integer(1, 53);
    return tuning::Pitch(positive_rational(16)) * tuning::Pitch(tuning::EtPitch(integer(-2 * n, 2 * n), n));
  }

  std::vector<tuning::Pitch> pitches(std::size_t count) {
    std::vector<tuning::Pitch> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(pitch());
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testing_support
