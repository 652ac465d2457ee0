#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "seqmon/kernels.hpp"

namespace seqmon {

/// Ordered observations with incremental partial-sum, sum-of-squares and
/// autocovariance cross-product state, bounded by a fixed horizon N.
/// Append-only; all derived state is maintained so that the sequential
/// statistics can be evaluated in O(kernel window + lags) per step.
class TimeSeriesWindow {
 public:
  explicit TimeSeriesWindow(std::size_t horizon);

  /// Builds a window holding the whole series, horizon = series length
  /// unless given explicitly.
  static TimeSeriesWindow from_series(std::span<const double> series);
  static TimeSeriesWindow from_series(std::span<const double> series, std::size_t horizon);

  void append(double y);

  std::size_t size() const { return obs_.size(); }
  std::size_t horizon() const { return horizon_; }
  std::span<const double> observations() const { return obs_; }

  /// S_i = sum of the first i observations; S_0 = 0.
  double partial_sum(std::size_t i) const { return i == 0 ? 0.0 : cumsum_[i - 1]; }

  /// Q_n = sum of squared observations over the first n.
  double sum_of_squares(std::size_t n) const { return n == 0 ? 0.0 : cumsumsq_[n - 1]; }

  /// Extends the maintained cross-product sums to lags 1..max_lag.
  void ensure_lags(std::size_t max_lag) const;

  /// sum_{i=1}^{n-k} Y_i Y_{i+k} for the current n (lazily maintained).
  double cross_sum(std::size_t k) const;

 private:
  std::size_t horizon_;
  std::vector<double> obs_;
  std::vector<double> cumsum_;
  std::vector<double> cumsumsq_;
  mutable std::vector<double> cross_;
};

/// Lag truncation rules for the Newey-West estimator, evaluated at the
/// current sample size n.
struct LagRule {
  enum class Kind { m3, m4, m12, fixed };
  Kind kind = Kind::m4;
  std::size_t fixed_m = 0;

  static LagRule m3() { return {Kind::m3, 0}; }
  static LagRule m4() { return {Kind::m4, 0}; }
  static LagRule m12() { return {Kind::m12, 0}; }
  static LagRule fixed(std::size_t m) { return {Kind::fixed, m}; }

  static LagRule from_name(const std::string& name);
  std::string name() const;
};

/// m3 -> floor(0.75 n^(1/3) + 0.5), m4 -> floor(4 (n/100)^(1/4) + 0.5),
/// m12 -> floor(12 (n/100)^(1/4) + 0.5), fixed(m) -> m.
/// The result is clamped to n - 1 so early evaluations stay in range.
std::size_t resolve_lag(const LagRule& rule, std::size_t n);

enum class ResidualMode { none, demeaned, detrended };
ResidualMode residual_mode_from_name(const std::string& name);
std::string residual_mode_name(ResidualMode mode);

/// none -> identity; demeaned -> subtract the sample mean; detrended -> OLS
/// residuals of Y_i on (1, i). Throws InsufficientData below length 2
/// (demeaned) / 3 (detrended).
std::vector<double> apply_residual_mode(std::span<const double> series, ResidualMode mode);

/// Variance-ratio detection statistic
///   [n^-3 sum_{i<=n} S_i^2 K_h(i-n)] / [n^-2 sum_{j<=n} Y_j^2].
/// Does not depend on the horizon N. n = 0 returns 0 by definition.
/// Throws DegenerateDenominator when the squared-observation sum is zero.
double u_stat(const TimeSeriesWindow& w, std::size_t n, const KernelSpec& kernel);

/// Horizon-normalized Newey-West process with Bartlett weights w(k,m) = 1 - k/m:
///   (1/N) sum_{i<=n} Y_i^2 + 2 sum_{k=1}^m (1-k/m) (1/N) sum_{i<=n-k} Y_i Y_{i+k}.
/// The cross-product sums are truncated at i <= n-k so the estimator never
/// reads observations after time n.
double newey_west(const TimeSeriesWindow& w, std::size_t n, std::size_t m, std::size_t horizon);

/// Normalized detection statistic
///   [N^-1 sum_{i<=n} S_i^2 K_h(i-n)] / [n^-1 hac_sum(n, m)],
/// i.e. the kernel-weighted squared partial sums against the long-run
/// variance estimated from the n observations available at evaluation time
/// (equivalently (n/N) times the ratio against `newey_west`). At n = N the
/// two denominators coincide. The lag m is resolved from `rule` at n.
double u_tilde_stat(const TimeSeriesWindow& w, std::size_t n, std::size_t horizon,
                    const KernelSpec& kernel, const LagRule& rule);

}  // namespace seqmon
