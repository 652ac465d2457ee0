#include "seqmon/stopping.hpp"

#include <algorithm>
#include <cmath>

#include "seqmon/errors.hpp"

namespace seqmon {

Direction direction_from_name(const std::string& name) {
  if (name == "i0" || name == "detect_i0") return Direction::detect_i0;
  if (name == "i1" || name == "detect_i1") return Direction::detect_i1;
  throw ConfigError("unknown direction '" + name + "' (expected i0 or i1)");
}

std::string direction_name(Direction d) {
  return d == Direction::detect_i0 ? "i0" : "i1";
}

std::size_t MonitorConfig::default_start(double bandwidth) {
  return std::max<std::size_t>(2, static_cast<std::size_t>(std::floor(1.5 * bandwidth)));
}

void MonitorConfig::validate() const {
  if (horizon == 0) throw ConfigError("monitor: horizon N must be positive");
  if (start == 0 || start > horizon) throw ConfigError("monitor: start k must lie in [1, N]");
  if (!(control_limit > 0.0)) throw ConfigError("monitor: control limit c must be positive");
  if (!(kernel.bandwidth > 0.0)) throw ConfigError("monitor: bandwidth h must be positive");
  if (residuals != ResidualMode::none) {
    const std::size_t least = residuals == ResidualMode::demeaned ? 2 : 3;
    const std::size_t available = residual_window == ResidualWindow::expanding ? start : horizon;
    if (available < least) {
      throw ConfigError("monitor: residual transform needs more observations than available");
    }
  }
}

namespace {

bool crosses(Direction d, double value, double limit) {
  // Strict inequalities; ties at the limit do not stop.
  return d == Direction::detect_i0 ? value < limit : value > limit;
}

double evaluate_stat(const TimeSeriesWindow& w, std::size_t n, const MonitorConfig& cfg) {
  return cfg.direction == Direction::detect_i0
             ? u_stat(w, n, cfg.kernel)
             : u_tilde_stat(w, n, cfg.horizon, cfg.kernel, cfg.lag);
}

/// Shared monitoring loop; `next` yields the raw series one value at a time.
SignalResult monitor_loop(const std::function<std::optional<double>()>& next,
                          const MonitorConfig& cfg) {
  SignalResult result;
  const bool transform_each_step = cfg.residuals != ResidualMode::none;
  std::vector<double> raw;
  raw.reserve(cfg.horizon);
  TimeSeriesWindow window(cfg.horizon);

  for (std::size_t n = 1; n <= cfg.horizon; ++n) {
    auto y = next();
    if (!y.has_value()) {
      throw SourceExhausted("monitoring source ended at n=" + std::to_string(n - 1) +
                            " before the horizon N=" + std::to_string(cfg.horizon));
    }
    if (transform_each_step) {
      raw.push_back(*y);
    } else {
      window.append(*y);
    }
    if (n < cfg.start) continue;

    double value;
    if (transform_each_step) {
      auto residuals = apply_residual_mode(raw, cfg.residuals);
      auto prefix = TimeSeriesWindow::from_series(residuals, cfg.horizon);
      value = evaluate_stat(prefix, n, cfg);
    } else {
      value = evaluate_stat(window, n, cfg);
    }
    result.trace.emplace_back(n, value);
    if (crosses(cfg.direction, value, cfg.control_limit)) {
      result.stop_index = n;
      result.signaled = true;
      return result;
    }
  }
  result.stop_index = cfg.horizon;
  result.signaled = false;
  return result;
}

}  // namespace

SignalResult run_monitor(std::span<const double> series, const MonitorConfig& cfg) {
  cfg.validate();
  if (series.size() != cfg.horizon) {
    throw ConfigError("monitor: series length " + std::to_string(series.size()) +
                      " does not match horizon N=" + std::to_string(cfg.horizon));
  }
  if (cfg.residuals != ResidualMode::none && cfg.residual_window == ResidualWindow::full) {
    // Fixed-sample residuals over 1..N, then a plain monitoring pass.
    auto residuals = apply_residual_mode(series, cfg.residuals);
    MonitorConfig plain = cfg;
    plain.residuals = ResidualMode::none;
    std::size_t i = 0;
    return monitor_loop(
        [&residuals, &i]() -> std::optional<double> {
          return i < residuals.size() ? std::optional<double>(residuals[i++]) : std::nullopt;
        },
        plain);
  }
  std::size_t i = 0;
  return monitor_loop(
      [&series, &i]() -> std::optional<double> {
        return i < series.size() ? std::optional<double>(series[i++]) : std::nullopt;
      },
      cfg);
}

SignalResult monitor_stream(const std::function<std::optional<double>()>& source,
                            const MonitorConfig& cfg) {
  cfg.validate();
  if (cfg.residuals != ResidualMode::none && cfg.residual_window == ResidualWindow::full) {
    throw ConfigError("monitor_stream: full-sample residuals are unavailable online; "
                      "use residual_window = expanding");
  }
  return monitor_loop(source, cfg);
}

}  // namespace seqmon
