#include "seqmon/sample_path.hpp"

#include <cmath>

#include "seqmon/errors.hpp"

namespace seqmon {

SamplePath simulate_bm(std::size_t grid, RngStream& rng) {
  if (grid < 2) throw ConfigError("simulate_bm: grid must be >= 2");
  SamplePath path;
  path.tag = PathTag::bm;
  path.values.resize(grid + 1);
  const double scale = std::sqrt(1.0 / static_cast<double>(grid));
  path.values[0] = 0.0;
  for (std::size_t j = 1; j <= grid; ++j) {
    path.values[j] = path.values[j - 1] + scale * rng.normal();
  }
  return path;
}

SamplePath to_bridge_mu(const SamplePath& path) {
  if (path.tag != PathTag::bm) throw WrongTag("to_bridge_mu expects a Brownian motion path");
  SamplePath out;
  out.tag = PathTag::bridge_mu;
  const std::size_t grid = path.grid();
  out.values.resize(grid + 1);
  const double terminal = path.values[grid];
  for (std::size_t j = 0; j <= grid; ++j) {
    const double s = static_cast<double>(j) / static_cast<double>(grid);
    out.values[j] = path.values[j] - s * terminal;
  }
  return out;
}

SamplePath to_detrended_t(const SamplePath& path) {
  if (path.tag != PathTag::bm) throw WrongTag("to_detrended_t expects a Brownian motion path");
  const std::size_t grid = path.grid();
  const double step = path.step();
  double level = 0.0;   // int_0^1 B
  double tilted = 0.0;  // int_0^1 r B(r) dr
  for (std::size_t j = 0; j <= grid; ++j) {
    const double w = (j == 0 || j == grid) ? 0.5 : 1.0;
    const double r = static_cast<double>(j) * step;
    level += w * path.values[j];
    tilted += w * r * path.values[j];
  }
  level *= step;
  tilted *= step;

  SamplePath out;
  out.tag = PathTag::detrended_t;
  out.values.resize(grid + 1);
  for (std::size_t j = 0; j <= grid; ++j) {
    const double s = static_cast<double>(j) * step;
    out.values[j] = path.values[j] - (4.0 - 6.0 * s) * level - (12.0 * s - 6.0) * tilted;
  }
  return out;
}

SamplePath simulate_ou(double a, std::size_t grid, RngStream& rng) {
  if (grid < 2) throw ConfigError("simulate_ou: grid must be >= 2");
  SamplePath path;
  path.tag = PathTag::ou;
  path.ou_coefficient = a;
  path.values.resize(grid + 1);
  const double g = static_cast<double>(grid);
  const double decay = std::exp(a / g);
  const double step_var = a == 0.0 ? 1.0 / g : (std::exp(2.0 * a / g) - 1.0) / (2.0 * a);
  const double step_sd = std::sqrt(step_var);
  path.values[0] = 0.0;
  for (std::size_t j = 1; j <= grid; ++j) {
    path.values[j] = decay * path.values[j - 1] + step_sd * rng.normal();
  }
  return path;
}

}  // namespace seqmon
