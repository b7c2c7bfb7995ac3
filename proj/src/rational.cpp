#include "tuning/rational.hpp"

#include "tuning/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cmath>
#include <ostream>

namespace tuning {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = mp::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  auto to_int = [&](std::string_view part) -> BigInt {
    if (part.empty()) throw DomainError("malformed rational '" + std::string(text) + "'");
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw DomainError("malformed rational '" + std::string(text) + "'");
    for (std::size_t j = i; j < part.size(); ++j) {
      if (part[j] < '0' || part[j] > '9')
        throw DomainError("malformed rational '" + std::string(text) + "'");
    }
    return BigInt(std::string(part));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(to_int(text));
  return Rational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw DomainError("reciprocal of zero");
  return Rational(den_, num_);
}

Rational Rational::abs() const { return num_ < 0 ? -*this : *this; }

Rational Rational::pow(std::int64_t e) const {
  if (e < 0) return reciprocal().pow(-e);
  Rational r;
  r.num_ = mp::pow(num_, static_cast<unsigned>(e));
  r.den_ = mp::pow(den_, static_cast<unsigned>(e));
  return r;
}

BigInt Rational::floor() const {
  BigInt q = num_ / den_;  // truncates toward zero
  if (num_ < 0 && q * den_ != num_) q -= 1;
  return q;
}

double Rational::to_double() const {
  if (num_ == 0) return 0.0;
  double l = log2_of(mp::abs(num_)) - log2_of(den_);
  return static_cast<double>(num_.sign()) * std::exp2(l);
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::string Rational::ratio_str() const { return num_.str() + "/" + den_.str(); }

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw DomainError("division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

double log2_of(const BigInt& v) {
  if (v <= 0) throw DomainError("log2 of non-positive integer");
  const auto bits = mp::msb(v);
  if (bits < 53) return std::log2(v.convert_to<double>());
  const auto shift = bits - 52;
  BigInt top = v >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

}  // namespace tuning
