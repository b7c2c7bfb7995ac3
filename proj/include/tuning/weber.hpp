#pragma once

// Weber's law S * dP = k * dS in its discrete form. Uniform perceived
// increments C correspond to stimuli in geometric progression with ratio
// 1 + C/k, which is why equal perceived pitch steps give an equal-ratio scale.

#include <span>
#include <vector>

namespace tuning {

struct WeberParams {
  double k = 1.0;  // context constant, > 0
  double c = 0.0;  // uniform perception increment

  /// 1 + C/k; throws DomainError unless k > 0 and the ratio is positive.
  double ratio() const;
};

class StimulusSeries {
 public:
  /// Throws DomainError for fewer than two values or any value <= 0.
  explicit StimulusSeries(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::vector<double> values_;
};

/// dP_j = k (S_{j+1} - S_j) / S_j. Throws DomainError unless k > 0.
std::vector<double> perception_increments(const StimulusSeries& s, double k);

/// S_j = s1 (1 + C/k)^(j-1), j = 1..n. Throws DomainError for n < 2 or s1 <= 0.
StimulusSeries uniform_stimuli(double s1, const WeberParams& params, int n);

/// Every element within `rel_tol` (relative to the largest magnitude) of the first.
bool is_constant(std::span<const double> xs, double rel_tol);

/// Consecutive ratios constant within `rel_tol`.
bool is_geometric(const StimulusSeries& s, double rel_tol);

}  // namespace tuning
