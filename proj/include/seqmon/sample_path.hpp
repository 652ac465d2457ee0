#pragma once

#include <cstddef>
#include <vector>

#include "seqmon/rng.hpp"

namespace seqmon {

enum class PathTag { bm, bridge_mu, detrended_t, ou, composite };

/// Discretized realization of a limit process on the uniform grid
/// s = j/G, j = 0..G.
struct SamplePath {
  PathTag tag = PathTag::bm;
  double ou_coefficient = 0.0;  // meaningful for tag == ou
  std::vector<double> values;   // size G + 1

  std::size_t grid() const { return values.size() - 1; }
  double step() const { return 1.0 / static_cast<double>(grid()); }
};

/// Standard Brownian motion: B(j/G) = sum_{l<=j} xi_l / sqrt(G).
SamplePath simulate_bm(std::size_t grid, RngStream& rng);

/// B(s) - s B(1); the limit after demeaning.
SamplePath to_bridge_mu(const SamplePath& path);

/// B(s) - (4-6s) int_0^1 B - (12s-6) int_0^1 r B(r) dr; the limit after
/// detrending. Both integrals use the trapezoid rule on the grid.
SamplePath to_detrended_t(const SamplePath& path);

/// Ornstein-Uhlenbeck via the exact Gaussian recursion
///   Z((j+1)/G) = e^{a/G} Z(j/G) + eta_j,
/// eta_j iid N(0, (e^{2a/G}-1)/(2a)) for a != 0 and N(0, 1/G) for a = 0.
SamplePath simulate_ou(double a, std::size_t grid, RngStream& rng);

}  // namespace seqmon
