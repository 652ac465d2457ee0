#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "seqmon/kernels.hpp"
#include "seqmon/sample_path.hpp"

namespace seqmon {

/// Limiting laws of the sequential variance-ratio statistics.
///   u1         -- ratio law under a unit root (drives detect_i0 limits)
///   u2         -- scaled-statistic law under stationarity, with nuisance ratio
///   u2_tilde   -- law of the normalized statistic with a horizon-normalized
///                 long-run variance: s^-1 zeta int_0^s B^2 K(zeta(r-s)) dr
///   u2_tilde_n -- law matched to `u_tilde_stat`, whose variance estimate is
///                 normalized by the current sample size: drops the s^-1,
///                 i.e. zeta int_0^s B^2 K(zeta(r-s)) dr
///   u2_mu      -- stationary law under a local deterministic drift
///   uz         -- local-to-unity law driven by an Ornstein-Uhlenbeck path
///   u01        -- stationarity-to-unit-root change at fraction theta
///   u10        -- unit-root-to-stationarity change at fraction theta
enum class FunctionalKind { u1, u2, u2_tilde, u2_tilde_n, u2_mu, uz, u01, u10 };

FunctionalKind functional_kind_from_name(const std::string& name);
std::string functional_kind_name(FunctionalKind kind);

/// Transform applied to the driving Brownian path before evaluation,
/// matching statistics computed from demeaned or detrended residuals.
enum class PathTransform { none, demeaned, detrended };

struct LimitFunctionalSpec {
  FunctionalKind kind = FunctionalKind::u1;
  double zeta = 5.0;                     // N/h limit, >= 1
  Kernel kernel = Kernel::epanechnikov();  // evaluated unscaled as K(zeta (r-s))
  double nuisance_ratio = 1.0;           // u2: sigma^2 / E Y_1^2
  double ou_coefficient = 0.0;           // uz
  double changepoint = 0.5;              // u01/u10: theta in (0,1)
  std::function<double(double)> drift;   // u2_mu: mu(s); empty means mu == 0
  std::string drift_label;               // cache identity for a custom drift
  double sigma = 1.0;                    // u2_mu
  double mean_square = 1.0;              // u2_mu: E Y_1^2
  PathTransform transform = PathTransform::none;

  void validate() const;  // throws ConfigError

  /// Canonical identity string: base kind plus any non-default parameters,
  /// e.g. "uz(a=-15)" or "u01(theta=0.5)". Used as the cache key column.
  std::string cache_kind() const;

  /// Which process the functional is driven by.
  PathTag required_path() const {
    return kind == FunctionalKind::uz ? PathTag::ou : PathTag::bm;
  }
};

/// Evaluates the functional at a single point s in (0, 1] by trapezoid
/// quadrature on the path grid (s is snapped to the nearest grid point).
double eval_functional(const LimitFunctionalSpec& spec, const SamplePath& path, double s);

/// Evaluates the functional at every grid point s = j/G with s >= kappa,
/// sharing cumulative quadrature state across evaluation points.
/// Returns the values in grid order.
std::vector<double> eval_functional_on_grid(const LimitFunctionalSpec& spec,
                                            const SamplePath& path, double kappa);

}  // namespace seqmon
