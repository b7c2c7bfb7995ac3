#include "tuning/ratio_core.hpp"

#include "tuning/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cmath>

namespace tuning {

namespace mp = boost::multiprecision;

OctaveReduction reduce_to_octave_with_shift(const Rational& r) {
  if (!r.is_positive()) throw DomainError("octave reduction of non-positive value " + r.str());
  BigInt num = r.num();
  BigInt den = r.den();
  // Bit lengths put the quotient within a factor of two of [1, 2).
  std::int64_t shift = static_cast<std::int64_t>(mp::msb(den)) -
                       static_cast<std::int64_t>(mp::msb(num));
  if (shift > 0) num <<= static_cast<unsigned>(shift);
  if (shift < 0) den <<= static_cast<unsigned>(-shift);
  if (num < den) {
    num <<= 1;
    ++shift;
  }
  if (num >= 2 * den) {
    den <<= 1;
    --shift;
  }
  return {Rational(num, den), shift};
}

Rational reduce_to_octave(const Rational& r) { return reduce_to_octave_with_shift(r).value; }

BigInt integer_nth_root(const BigInt& x, unsigned n) {
  if (x < 0) throw DomainError("integer root of negative value");
  if (n == 0) throw DomainError("zeroth root");
  if (n == 1 || x < 2) return x;
  const unsigned bits = static_cast<unsigned>(mp::msb(x)) + 1;
  BigInt y = BigInt(1) << ((bits + n - 1) / n);  // y >= root
  while (true) {
    BigInt z = ((n - 1) * y + x / mp::pow(y, n - 1)) / n;
    if (z >= y) return y;
    y = std::move(z);
  }
}

std::optional<BigInt> perfect_nth_root(const BigInt& m, unsigned n) {
  if (m < 1) throw DomainError("perfect power test needs m >= 1");
  if (n < 2) throw DomainError("perfect power test needs n >= 2");
  BigInt a = integer_nth_root(m, n);
  if (mp::pow(a, n) == m) return a;
  return std::nullopt;
}

bool is_perfect_nth_power(const BigInt& m, unsigned n) { return perfect_nth_root(m, n).has_value(); }

bool is_nth_root_irrational(const BigInt& m, unsigned n) {
  if (m < 2) throw DomainError("irrationality test needs m >= 2");
  return !is_perfect_nth_power(m, n);
}

std::string format_scaled(const BigInt& scaled, int digits, bool exact) {
  if (digits < 1) throw DomainError("decimal rendering needs at least one digit");
  std::string s = scaled.str();
  const auto width = static_cast<std::size_t>(digits);
  if (s.size() <= width) s.insert(0, width + 1 - s.size(), '0');
  std::string int_part = s.substr(0, s.size() - width);
  std::string frac = s.substr(s.size() - width);
  if (exact) {
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
  }
  if (frac.empty()) return int_part;
  return int_part + "." + frac;
}

namespace {

std::string render_truncated(const Rational& r, int digits, bool strip_exact) {
  if (digits < 1) throw DomainError("decimal rendering needs at least one digit");
  const BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(digits));
  const BigInt magnitude = mp::abs(r.num()) * scale;
  const BigInt scaled = magnitude / r.den();
  const bool exact = strip_exact && (magnitude % r.den() == 0);
  std::string body = format_scaled(scaled, digits, exact);
  return r.sign() < 0 ? "-" + body : body;
}

}  // namespace

std::string to_decimal(const Rational& r, int digits) { return render_truncated(r, digits, true); }

std::string to_fixed(const Rational& r, int digits) { return render_truncated(r, digits, false); }

Cents cents(const Rational& r) {
  if (!r.is_positive()) throw DomainError("cents of non-positive value " + r.str());
  return {1200.0 * (log2_of(r.num()) - log2_of(r.den()))};
}

Cents cents(double ratio) {
  if (!(ratio > 0.0)) throw DomainError("cents of non-positive value");
  return {1200.0 * std::log2(ratio)};
}

}  // namespace tuning
