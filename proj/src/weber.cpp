#include "tuning/weber.hpp"

#include "tuning/errors.hpp"

#include <algorithm>
#include <cmath>

namespace tuning {

double WeberParams::ratio() const {
  if (!(k > 0.0)) throw DomainError("Weber constant k must be positive");
  const double r = 1.0 + c / k;
  if (!(r > 0.0)) throw DomainError("stimulus ratio 1 + C/k must be positive");
  return r;
}

StimulusSeries::StimulusSeries(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw DomainError("a stimulus series needs at least two values");
  if (!std::ranges::all_of(values_, [](double v) { return v > 0.0; })) {
    throw DomainError("stimuli must be positive");
  }
}

std::vector<double> perception_increments(const StimulusSeries& s, double k) {
  if (!(k > 0.0)) throw DomainError("Weber constant k must be positive");
  const auto v = s.values();
  std::vector<double> out;
  out.reserve(v.size() - 1);
  for (std::size_t j = 0; j + 1 < v.size(); ++j) out.push_back(k * (v[j + 1] - v[j]) / v[j]);
  return out;
}

StimulusSeries uniform_stimuli(double s1, const WeberParams& params, int n) {
  if (n < 2) throw DomainError("a stimulus series needs n >= 2");
  if (!(s1 > 0.0)) throw DomainError("first stimulus must be positive");
  const double r = params.ratio();
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) values.push_back(s1 * std::pow(r, j));
  return StimulusSeries(std::move(values));
}

bool is_constant(std::span<const double> xs, double rel_tol) {
  if (xs.empty()) return true;
  double scale = 0.0;
  for (double x : xs) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return true;
  return std::ranges::all_of(xs, [&](double x) { return std::abs(x - xs[0]) <= rel_tol * scale; });
}

bool is_geometric(const StimulusSeries& s, double rel_tol) {
  const auto v = s.values();
  std::vector<double> ratios;
  for (std::size_t j = 0; j + 1 < v.size(); ++j) ratios.push_back(v[j + 1] / v[j]);
  return is_constant(ratios, rel_tol);
}

}  // namespace tuning
