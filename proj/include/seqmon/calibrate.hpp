#pragma once

#include <cstdint>
#include <vector>

#include "seqmon/limit_functionals.hpp"
#include "seqmon/stopping.hpp"

namespace seqmon {

struct CalibrationResult {
  double control_limit = 0.0;  // c
  double alpha = 0.0;          // nominal level
  double kappa = 0.0;          // start fraction
  std::size_t replications = 0;
  std::size_t grid = 0;
  double quantile_se = 0.0;  // bootstrap standard error of the quantile
  std::uint64_t seed = 0;
};

/// Path-wise extrema of the limit functional over the grid {s = j/G >= kappa}:
/// the minimum for detect_i0 and the maximum for detect_i1, one value per
/// replication. Replications are keyed by (seed, replication index), so the
/// result is identical for any thread count.
std::vector<double> simulate_extrema(const LimitFunctionalSpec& spec, Direction direction,
                                     double kappa, std::size_t replications, std::size_t grid,
                                     std::uint64_t seed, unsigned threads = 0);

/// Monte Carlo control limit: the alpha-quantile of path minima (detect_i0)
/// or the (1-alpha)-quantile of path maxima (detect_i1), with a 200-resample
/// bootstrap standard error. Quantiles use type-7 interpolation.
CalibrationResult calibrate(const LimitFunctionalSpec& spec, Direction direction, double alpha,
                            double kappa, std::size_t replications, std::size_t grid,
                            std::uint64_t seed, unsigned threads = 0);

/// Natural monitoring direction for each limiting law: laws of the raw
/// variance-ratio statistic pair with detect_i0, laws of the normalized
/// statistic with detect_i1.
Direction default_direction(FunctionalKind kind);

}  // namespace seqmon
