#include "seqmon/stats.hpp"

#include <algorithm>
#include <cmath>

#include "seqmon/errors.hpp"
#include "seqmon/numeric.hpp"

namespace seqmon {

TimeSeriesWindow::TimeSeriesWindow(std::size_t horizon) : horizon_(horizon) {
  if (horizon == 0) throw ConfigError("horizon must be positive");
  obs_.reserve(horizon);
  cumsum_.reserve(horizon);
  cumsumsq_.reserve(horizon);
}

TimeSeriesWindow TimeSeriesWindow::from_series(std::span<const double> series) {
  return from_series(series, series.size());
}

TimeSeriesWindow TimeSeriesWindow::from_series(std::span<const double> series,
                                               std::size_t horizon) {
  TimeSeriesWindow w(horizon);
  for (double y : series) w.append(y);
  return w;
}

void TimeSeriesWindow::append(double y) {
  if (obs_.size() >= horizon_) throw ConfigError("window already holds N observations");
  obs_.push_back(y);
  cumsum_.push_back((cumsum_.empty() ? 0.0 : cumsum_.back()) + y);
  cumsumsq_.push_back((cumsumsq_.empty() ? 0.0 : cumsumsq_.back()) + y * y);
  const std::size_t n = obs_.size();
  for (std::size_t k = 1; k <= cross_.size() && k < n; ++k) {
    cross_[k - 1] += obs_[n - 1 - k] * y;
  }
}

void TimeSeriesWindow::ensure_lags(std::size_t max_lag) const {
  const std::size_t n = obs_.size();
  while (cross_.size() < max_lag) {
    const std::size_t k = cross_.size() + 1;
    double acc = 0.0;
    for (std::size_t i = 0; i + k < n; ++i) acc += obs_[i] * obs_[i + k];
    cross_.push_back(acc);
  }
}

double TimeSeriesWindow::cross_sum(std::size_t k) const {
  ensure_lags(k);
  return k == 0 ? sum_of_squares(obs_.size()) : cross_[k - 1];
}

LagRule LagRule::from_name(const std::string& name) {
  if (name == "m3") return m3();
  if (name == "m4") return m4();
  if (name == "m12") return m12();
  if (name.rfind("fixed:", 0) == 0) {
    const long v = std::stol(name.substr(6));
    if (v < 0) throw ConfigError("fixed lag must be >= 0");
    return fixed(static_cast<std::size_t>(v));
  }
  throw ConfigError("unknown lag rule '" + name + "' (expected m3, m4, m12 or fixed:M)");
}

std::string LagRule::name() const {
  switch (kind) {
    case Kind::m3: return "m3";
    case Kind::m4: return "m4";
    case Kind::m12: return "m12";
    case Kind::fixed: return "fixed:" + std::to_string(fixed_m);
  }
  return "?";
}

std::size_t resolve_lag(const LagRule& rule, std::size_t n) {
  if (n == 0) throw ConfigError("resolve_lag requires n >= 1");
  double raw = 0.0;
  switch (rule.kind) {
    case LagRule::Kind::m3:
      raw = std::floor(0.75 * std::cbrt(static_cast<double>(n)) + 0.5);
      break;
    case LagRule::Kind::m4:
      raw = std::floor(4.0 * std::pow(static_cast<double>(n) / 100.0, 0.25) + 0.5);
      break;
    case LagRule::Kind::m12:
      raw = std::floor(12.0 * std::pow(static_cast<double>(n) / 100.0, 0.25) + 0.5);
      break;
    case LagRule::Kind::fixed:
      raw = static_cast<double>(rule.fixed_m);
      break;
  }
  auto m = static_cast<std::size_t>(raw);
  return std::min(m, n - 1);
}

ResidualMode residual_mode_from_name(const std::string& name) {
  if (name == "none") return ResidualMode::none;
  if (name == "demeaned") return ResidualMode::demeaned;
  if (name == "detrended") return ResidualMode::detrended;
  throw ConfigError("unknown residual mode '" + name + "'");
}

std::string residual_mode_name(ResidualMode mode) {
  switch (mode) {
    case ResidualMode::none: return "none";
    case ResidualMode::demeaned: return "demeaned";
    case ResidualMode::detrended: return "detrended";
  }
  return "?";
}

std::vector<double> apply_residual_mode(std::span<const double> series, ResidualMode mode) {
  const std::size_t n = series.size();
  switch (mode) {
    case ResidualMode::none:
      return {series.begin(), series.end()};
    case ResidualMode::demeaned: {
      if (n < 2) throw InsufficientData("demeaning needs at least 2 observations");
      const double m = mean(series);
      std::vector<double> out(n);
      for (std::size_t i = 0; i < n; ++i) out[i] = series[i] - m;
      return out;
    }
    case ResidualMode::detrended: {
      if (n < 3) throw InsufficientData("detrending needs at least 3 observations");
      // OLS of Y_i on (1, i), i = 1..n.
      const double tbar = 0.5 * static_cast<double>(n + 1);
      const double ybar = mean(series);
      KahanSum sxy, sxx;
      for (std::size_t i = 0; i < n; ++i) {
        const double dt = static_cast<double>(i + 1) - tbar;
        sxy.add(dt * (series[i] - ybar));
        sxx.add(dt * dt);
      }
      const double slope = sxy.value() / sxx.value();
      const double intercept = ybar - slope * tbar;
      std::vector<double> out(n);
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = series[i] - intercept - slope * static_cast<double>(i + 1);
      }
      return out;
    }
  }
  return {};
}

namespace {

/// sum_{i=lo..n} S_i^2 K_h(i - n); lo skips indices outside a bounded
/// kernel support (those weights are exactly zero).
double weighted_squared_partial_sums(const TimeSeriesWindow& w, std::size_t n,
                                     const KernelSpec& kernel) {
  std::size_t lo = 1;
  if (kernel.shape.bounded_support()) {
    const double reach = kernel.shape.support() * kernel.bandwidth;
    if (static_cast<double>(n) - 1.0 > reach) {
      lo = n - static_cast<std::size_t>(std::floor(reach));
    }
  }
  KahanSum acc;
  for (std::size_t i = lo; i <= n; ++i) {
    const double s = w.partial_sum(i);
    const double weight =
        scaled_weight(kernel, static_cast<double>(i) - static_cast<double>(n));
    acc.add(s * s * weight);
  }
  return acc.value();
}

}  // namespace

double u_stat(const TimeSeriesWindow& w, std::size_t n, const KernelSpec& kernel) {
  if (n == 0) return 0.0;  // U_N(s) = 0 for s < 1/N by definition
  if (n > w.size()) throw ConfigError("u_stat: n exceeds observation count");
  const double denom = w.sum_of_squares(n);
  if (denom <= 0.0) {
    throw DegenerateDenominator("u_stat: all observations in the prefix are zero");
  }
  const double numer = weighted_squared_partial_sums(w, n, kernel);
  return numer / (static_cast<double>(n) * denom);
}

namespace {

/// Bartlett-weighted HAC sum without the sample-size normalization:
/// sum_{i<=n} Y_i^2 + 2 sum_{k=1}^m (1-k/m) sum_{i<=n-k} Y_i Y_{i+k}.
double hac_sum(const TimeSeriesWindow& w, std::size_t n, std::size_t m) {
  if (n == 0 || n > w.size()) throw ConfigError("hac estimator: n out of range");
  if (m >= n) throw InvalidLag("hac estimator: lag m must satisfy m < n");
  double acc = w.sum_of_squares(n);
  if (m > 0) {
    const bool cached = (n == w.size());
    if (cached) w.ensure_lags(m);
    for (std::size_t k = 1; k < m; ++k) {  // w(m,m) = 0, term skipped
      const double weight = 1.0 - static_cast<double>(k) / static_cast<double>(m);
      double cross;
      if (cached) {
        cross = w.cross_sum(k);
      } else {
        cross = 0.0;
        const auto obs = w.observations();
        for (std::size_t i = 0; i + k < n; ++i) cross += obs[i] * obs[i + k];
      }
      acc += 2.0 * weight * cross;
    }
  }
  return acc;
}

}  // namespace

double newey_west(const TimeSeriesWindow& w, std::size_t n, std::size_t m,
                  std::size_t horizon) {
  if (n > horizon) throw ConfigError("newey_west: n exceeds horizon");
  return hac_sum(w, n, m) / static_cast<double>(horizon);
}

double u_tilde_stat(const TimeSeriesWindow& w, std::size_t n, std::size_t horizon,
                    const KernelSpec& kernel, const LagRule& rule) {
  if (n == 0 || n > w.size()) throw ConfigError("u_tilde_stat: n out of range");
  if (n > horizon) throw ConfigError("u_tilde_stat: n exceeds horizon");
  const std::size_t m = resolve_lag(rule, n);
  // Long-run variance estimated from the n observations seen so far; at the
  // horizon n = N this is the fixed-sample estimator.
  const double denom = hac_sum(w, n, m) / static_cast<double>(n);
  if (denom <= 0.0) {
    throw DegenerateDenominator("u_tilde_stat: nonpositive long-run variance estimate");
  }
  const double numer =
      weighted_squared_partial_sums(w, n, kernel) / static_cast<double>(horizon);
  return numer / denom;
}

}  // namespace seqmon
