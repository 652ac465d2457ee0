#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace seqmon {

/// Kahan compensated accumulator. Squared partial sums span many orders of
/// magnitude under I(1), so the statistic numerators are accumulated with
/// compensation regardless of length.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - comp_;
    const double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) {
  KahanSum acc;
  for (double x : xs) acc.add(x);
  return acc.value();
}

inline double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  return compensated_sum(xs) / static_cast<double>(xs.size());
}

/// Unbiased sample variance (n-1 denominator); 0 for n < 2.
double sample_variance(std::span<const double> xs);

/// Standard error of the mean.
double mean_standard_error(std::span<const double> xs);

/// Type-7 quantile (linear interpolation of order statistics) of a sorted
/// sample. `p` in [0,1]. This is the convention fixed for calibration tables
/// so that results are bit-reproducible given a seed.
double quantile_sorted(std::span<const double> sorted, double p);

/// Convenience overload that copies and sorts.
double quantile(std::vector<double> xs, double p);

/// Cumulative trapezoid integral of `values` sampled on a uniform grid with
/// spacing `step`. out[0] = 0, out[j] = integral up to grid point j.
std::vector<double> cumulative_trapezoid(std::span<const double> values, double step);

}  // namespace seqmon
