#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seqmon/kernels.hpp"
#include "seqmon/stats.hpp"

namespace seqmon {

/// detect_i0: watch the variance-ratio statistic, stop when it drops below c
/// (evidence against a unit root). detect_i1: watch the normalized statistic,
/// stop when it exceeds c (evidence against stationarity).
enum class Direction { detect_i0, detect_i1 };

Direction direction_from_name(const std::string& name);
std::string direction_name(Direction d);

enum class ResidualWindow { full, expanding };

struct MonitorConfig {
  Direction direction = Direction::detect_i0;
  double control_limit = 0.0;  // c > 0
  std::size_t horizon = 0;     // N
  std::size_t start = 0;       // k in [1, N]
  KernelSpec kernel{Kernel::epanechnikov(), 1.0};
  LagRule lag = LagRule::m4();  // used by detect_i1 only
  ResidualMode residuals = ResidualMode::none;
  ResidualWindow residual_window = ResidualWindow::full;

  /// Rule-of-thumb start of monitoring: max(2, floor(1.5 h)).
  static std::size_t default_start(double bandwidth);

  void validate() const;  // throws ConfigError
};

/// Outcome of one monitoring run. By the truncation convention a run that
/// never crosses reports stop_index = N; `signaled` separates that case from
/// a crossing that happens exactly at the horizon.
struct SignalResult {
  std::size_t stop_index = 0;
  bool signaled = false;
  std::vector<std::pair<std::size_t, double>> trace;  // (n, statistic) for n = k..stop
};

/// Evaluates the configured statistic at n = k..N in order and stops at the
/// first strict crossing. `series` must hold exactly N observations.
SignalResult run_monitor(std::span<const double> series, const MonitorConfig& cfg);

/// Online variant: pulls observations one at a time and stops consuming at
/// the signal. With residuals enabled the transform is recomputed on the
/// expanding prefix 1..n. Throws SourceExhausted if the source ends before
/// the horizon without a signal.
SignalResult monitor_stream(const std::function<std::optional<double>()>& source,
                            const MonitorConfig& cfg);

}  // namespace seqmon
