#include "tuning/et_scale.hpp"

#include "tuning/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tuning {

namespace mp = boost::multiprecision;

EtPitch::EtPitch(std::int64_t k, std::int64_t n) : k_(k), n_(n) {
  if (n < 1) throw DomainError("equal division needs n >= 1, got " + std::to_string(n));
}

EtPitch EtPitch::reduced() const {
  const std::int64_t g = std::gcd(k_, n_);
  return {k_ / g, n_ / g};
}

double EtPitch::to_double() const {
  return std::exp2(static_cast<double>(k_) / static_cast<double>(n_));
}

Cents EtPitch::cents() const {
  return {1200.0 * static_cast<double>(k_) / static_cast<double>(n_)};
}

std::string EtPitch::form() const {
  if (is_rational()) return Rational(2).pow(k_ / n_).str();
  return "2^(" + std::to_string(k_) + "/" + std::to_string(n_) + ")";
}

double default_base_hz() { return 440.0 / std::exp2(9.0 / 12.0); }

double EtScale::frequency(std::size_t index) const {
  return base_hz * pitches.at(index).to_double();
}

EtScale generate_et(std::int64_t n, double base_hz) {
  if (n < 1) throw DomainError("equal division needs n >= 1, got " + std::to_string(n));
  if (!(base_hz > 0.0)) throw DomainError("base frequency must be positive");
  EtScale scale{base_hz, n, {}};
  scale.pitches.reserve(static_cast<std::size_t>(n) + 1);
  for (std::int64_t k = 0; k <= n; ++k) scale.pitches.emplace_back(k, n);
  return scale;
}

BigInt et_scaled_floor(const EtPitch& p, int digits) {
  if (digits < 1) throw DomainError("decimal rendering needs at least one digit");
  const EtPitch r = p.reduced();
  const auto root = static_cast<unsigned>(r.n());
  // floor(2^(k/n) 10^d) = floor((2^k 10^(d n))^(1/n)); flooring the radicand
  // first does not change the result.
  BigInt radicand = mp::pow(BigInt(10), static_cast<unsigned>(digits) * root);
  if (r.k() >= 0) {
    radicand <<= static_cast<unsigned>(r.k());
  } else {
    radicand >>= static_cast<unsigned>(-r.k());
  }
  return integer_nth_root(radicand, root);
}

std::string et_value(const EtPitch& p, int digits) {
  if (p.is_rational()) return to_decimal(Rational(2).pow(p.k() / p.n()), digits);
  return format_scaled(et_scaled_floor(p, digits), digits, false);
}

std::int64_t et_semitone_count(std::int64_t i1, std::int64_t i2) {
  return i2 >= i1 ? i2 - i1 : i1 - i2;
}

bool is_diatonic_index(int degree) {
  return std::ranges::find(kDiatonicIndices, degree) != std::end(kDiatonicIndices);
}

std::vector<EtPitch> diatonic_subset(const EtScale& scale) {
  if (scale.n != 12) {
    throw UnsupportedDivisionError("diatonic subset is defined for 12 divisions, got " +
                                   std::to_string(scale.n));
  }
  std::vector<EtPitch> out;
  for (int idx : kDiatonicIndices) out.push_back(scale.pitches.at(static_cast<std::size_t>(idx)));
  return out;
}

}  // namespace tuning
