#include "tuning/monzo.hpp"

#include "tuning/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace tuning {

namespace mp = boost::multiprecision;

namespace {

void check_bound(const Monzo& m, std::int64_t bound) {
  if (m.max_abs_exponent() > bound) {
    throw BoundExceededError("monzo " + m.str() + " exceeds exponent bound " +
                             std::to_string(bound));
  }
}

// Strips every factor p from v; returns the multiplicity.
std::int64_t strip(BigInt& v, unsigned p) {
  std::int64_t count = 0;
  while (v % p == 0) {
    v /= p;
    ++count;
  }
  return count;
}

BigInt prime_power(unsigned p, std::int64_t e) {
  return mp::pow(BigInt(p), static_cast<unsigned>(e));
}

}  // namespace

std::int64_t Monzo::max_abs_exponent() const noexcept {
  return std::max({std::abs(exp2), std::abs(exp3), std::abs(exp5)});
}

std::string Monzo::str() const {
  return "[" + std::to_string(exp2) + ", " + std::to_string(exp3) + ", " +
         std::to_string(exp5) + ">";
}

Rational monzo_to_rational(const Monzo& m, std::int64_t bound) {
  check_bound(m, bound);
  BigInt num = 1;
  BigInt den = 1;
  const std::pair<unsigned, std::int64_t> factors[] = {{2, m.exp2}, {3, m.exp3}, {5, m.exp5}};
  for (const auto& [p, e] : factors) {
    if (e > 0) num *= prime_power(p, e);
    if (e < 0) den *= prime_power(p, -e);
  }
  return Rational(num, den);
}

std::optional<Monzo> rational_to_monzo(const Rational& r, std::int64_t bound) {
  if (!r.is_positive()) throw DomainError("monzo of non-positive value " + r.str());
  BigInt num = r.num();
  BigInt den = r.den();
  Monzo m;
  m.exp2 = strip(num, 2) - strip(den, 2);
  m.exp3 = strip(num, 3) - strip(den, 3);
  m.exp5 = strip(num, 5) - strip(den, 5);
  if (num != 1 || den != 1) return std::nullopt;
  check_bound(m, bound);
  return m;
}

bool is_five_limit(const Rational& r) {
  if (!r.is_positive()) return false;
  return rational_to_monzo(r, std::numeric_limits<std::int64_t>::max()).has_value();
}

std::string exact_form(const Monzo& m) {
  std::string upper;
  std::string lower;
  auto append = [](std::string& side, const char* prime, std::int64_t e) {
    if (e == 0) return;
    if (!side.empty()) side += "*";
    side += prime;
    if (e != 1) side += "^" + std::to_string(e);
  };
  const std::pair<const char*, std::int64_t> factors[] = {{"2", m.exp2}, {"3", m.exp3}, {"5", m.exp5}};
  for (const auto& [p, e] : factors) {
    if (e > 0) append(upper, p, e);
    if (e < 0) append(lower, p, -e);
  }
  if (upper.empty()) upper = "1";
  if (lower.empty()) return upper;
  return upper + "/" + lower;
}

}  // namespace tuning
