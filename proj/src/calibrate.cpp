#include "seqmon/calibrate.hpp"

#include <algorithm>
#include <cmath>

#include "seqmon/errors.hpp"
#include "seqmon/numeric.hpp"
#include "seqmon/parallel.hpp"

namespace seqmon {

Direction default_direction(FunctionalKind kind) {
  switch (kind) {
    case FunctionalKind::u1:
    case FunctionalKind::uz:
    case FunctionalKind::u10:
      return Direction::detect_i0;
    case FunctionalKind::u2:
    case FunctionalKind::u2_tilde:
    case FunctionalKind::u2_tilde_n:
    case FunctionalKind::u2_mu:
    case FunctionalKind::u01:
      return Direction::detect_i1;
  }
  return Direction::detect_i0;
}

std::vector<double> simulate_extrema(const LimitFunctionalSpec& spec, Direction direction,
                                     double kappa, std::size_t replications, std::size_t grid,
                                     std::uint64_t seed, unsigned threads) {
  spec.validate();
  if (!(kappa > 0.0 && kappa < 1.0)) throw ConfigError("calibrate: kappa must lie in (0,1)");
  if (grid < 100) throw ConfigError("calibrate: grid must be >= 100");

  std::vector<double> extrema(replications);
  parallel_for(replications, threads, [&](std::size_t rep) {
    RngStream rng(seed, rep, RngDomain::calibration);
    SamplePath path = spec.kind == FunctionalKind::uz
                          ? simulate_ou(spec.ou_coefficient, grid, rng)
                          : simulate_bm(grid, rng);
    switch (spec.transform) {
      case PathTransform::none: break;
      case PathTransform::demeaned: path = to_bridge_mu(path); break;
      case PathTransform::detrended: path = to_detrended_t(path); break;
    }
    const auto values = eval_functional_on_grid(spec, path, kappa);
    extrema[rep] = direction == Direction::detect_i0
                       ? *std::min_element(values.begin(), values.end())
                       : *std::max_element(values.begin(), values.end());
  });
  return extrema;
}

CalibrationResult calibrate(const LimitFunctionalSpec& spec, Direction direction, double alpha,
                            double kappa, std::size_t replications, std::size_t grid,
                            std::uint64_t seed, unsigned threads) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("calibrate: alpha must lie in (0,1)");
  if (replications < 1000) throw ConfigError("calibrate: need at least 1000 replications");

  auto extrema = simulate_extrema(spec, direction, kappa, replications, grid, seed, threads);
  std::sort(extrema.begin(), extrema.end());
  const double order = direction == Direction::detect_i0 ? alpha : 1.0 - alpha;
  const double limit = quantile_sorted(extrema, order);

  // Bootstrap standard error of the quantile, 200 resamples on a dedicated
  // random stream so extrema streams stay untouched.
  constexpr std::size_t kResamples = 200;
  std::vector<double> boot(kResamples);
  std::vector<double> sample(extrema.size());
  RngStream rng(seed, 0, RngDomain::bootstrap);
  for (std::size_t b = 0; b < kResamples; ++b) {
    for (auto& value : sample) {
      value = extrema[rng.next_u64() % extrema.size()];
    }
    std::sort(sample.begin(), sample.end());
    boot[b] = quantile_sorted(sample, order);
  }
  const double se = std::sqrt(sample_variance(boot));

  CalibrationResult result;
  result.control_limit = limit;
  result.alpha = alpha;
  result.kappa = kappa;
  result.replications = replications;
  result.grid = grid;
  result.quantile_se = se;
  result.seed = seed;
  return result;
}

}  // namespace seqmon
