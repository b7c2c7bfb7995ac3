#pragma once

#include "tuning/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace tuning {

inline constexpr std::int64_t kDefaultExponentBound = 64;

/// A 5-limit pitch ratio 2^exp2 * 3^exp3 * 5^exp5 stored by its prime exponents.
struct Monzo {
  std::int64_t exp2 = 0;
  std::int64_t exp3 = 0;
  std::int64_t exp5 = 0;

  friend bool operator==(const Monzo&, const Monzo&) = default;

  /// Componentwise sum: the monzo of the product of the two ratios.
  friend Monzo operator+(const Monzo& a, const Monzo& b) {
    return {a.exp2 + b.exp2, a.exp3 + b.exp3, a.exp5 + b.exp5};
  }
  friend Monzo operator-(const Monzo& a, const Monzo& b) {
    return {a.exp2 - b.exp2, a.exp3 - b.exp3, a.exp5 - b.exp5};
  }
  friend Monzo operator-(const Monzo& a) { return {-a.exp2, -a.exp3, -a.exp5}; }

  bool is_three_limit() const noexcept { return exp5 == 0; }
  std::int64_t max_abs_exponent() const noexcept;

  /// "[exp2, exp3, exp5>" bracket notation.
  std::string str() const;
};

/// Exact fraction for the monzo. Throws BoundExceededError when any
/// exponent magnitude exceeds `bound`.
Rational monzo_to_rational(const Monzo& m, std::int64_t bound = kDefaultExponentBound);

/// Factorization over {2, 3, 5}. Returns nullopt when the value is not
/// 5-smooth; that is a membership answer, not an error. Throws DomainError
/// for r <= 0 and BoundExceededError when an exponent exceeds `bound`.
std::optional<Monzo> rational_to_monzo(const Rational& r,
                                       std::int64_t bound = kDefaultExponentBound);

/// True iff num and den factor entirely over {2, 3, 5}.
bool is_five_limit(const Rational& r);

/// Fraction-of-prime-powers rendering used in tables: "3^5/2^7", "2^2/3",
/// "3*5/2^3", "1", "2".
std::string exact_form(const Monzo& m);

}  // namespace tuning
