#include <cmath>

#include "seqmon/errors.hpp"
#include "table_definitions.hpp"

namespace seqmon {
namespace {

// Published simulation results, together with the conventions that the
// printed cells pin down:
//
//  * Tables 1-2 cite run lengths measured from the start of monitoring k:
//    the cells satisfy ARL = CARL * rate + (N - k) * (1 - rate) exactly,
//    which identifies both the convention and k = 75 (with plain stop
//    indices the identity misses by a wide margin).
//  * The unit-root detection statistic normalizes its long-run variance by
//    the current sample size n: the n-normalized statistic reproduces every
//    Table 2 row at the documented control limit, while the horizon-
//    normalized form detects far too fast (CARL ~17 instead of 51) and no
//    control limit reconciles its size, power and CARL columns at once.
//  * Tables 3-4 start monitoring at k = h: the h = 125 rows report mean
//    signal indices well below 1.5h = 187, and k = h reproduces the
//    conditional delays across all bandwidths.
//  * "Conditional average delay" counts signals at or after the change
//    point: at the theta = 0.75 cells the mean stop index among all signals
//    sits below the change point (the rate is near the false-alarm level),
//    so only the detection-only average matches the printed values.
//  * Table 2 control limits come from the u2_tilde law at kappa = 0.3;
//    Table 4 control limits come from the statistic-matched u2_tilde_n law
//    at kappa = h/N. Only that pairing reproduces both tables: a single law
//    for both leaves one table off by many standard errors in every row.

constexpr std::size_t kHorizon = 250;
constexpr double kAlphaTol = 0.02;   // size cells
constexpr double kPowerTol = 0.03;   // table 1 power cells
constexpr double kLengthTol = 5.0;   // ARL/CARL/delay cells
constexpr double kCpRateTol = 0.02;  // tables 3-4 rate cells

MonitorConfig base_config(Direction direction, double bandwidth, std::size_t start) {
  MonitorConfig cfg;
  cfg.direction = direction;
  cfg.horizon = kHorizon;
  cfg.start = start;
  cfg.kernel = KernelSpec{Kernel::epanechnikov(), bandwidth};
  cfg.lag = LagRule::m4();
  return cfg;
}

DgpSpec arma(double phi, double beta) {
  DgpSpec spec;
  spec.kind = DgpSpec::Kind::arma11;
  spec.length = kHorizon;
  spec.phi = phi;
  spec.beta = beta;
  return spec;
}

std::string num_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

TableReplication table1() {
  TableReplication table;
  table.table_id = 1;
  const double betas[] = {-0.8, -0.5, 0.0, 0.5, 0.8};

  struct Row {
    double phi;
    double rate[5];
    const double* carl;  // null for the size row
    double arl[5];
  };
  static const double carl95[] = {101.2, 101.2, 100.0, 92.6, 70.7};
  static const double carl90[] = {92.2, 91.6, 90.2, 79.6, 52.2};
  static const double carl70[] = {69.0, 68.5, 64.5, 46.3, 22.4};
  static const Row rows[] = {
      {1.0, {0.04, 0.04, 0.042, 0.051, 0.097}, nullptr, {171.9, 171.9, 171.7, 170.7, 165.2}},
      {0.95, {0.228, 0.23, 0.236, 0.285, 0.462}, carl95, {158.2, 158.0, 157.3, 151.5, 126.9}},
      {0.9, {0.347, 0.352, 0.362, 0.443, 0.642}, carl90, {146.3, 145.6, 144.3, 132.7, 96.2}},
      {0.7, {0.557, 0.557, 0.589, 0.717, 0.931}, carl70, {116.0, 115.7, 109.9, 82.8, 33.0}},
  };

  const std::size_t start = MonitorConfig::default_start(50.0);  // k = 75
  for (const auto& row : rows) {
    for (int b = 0; b < 5; ++b) {
      TableCell cell;
      cell.row_label = "phi=" + num_label(row.phi);
      cell.col_label = "beta=" + num_label(betas[b]);
      cell.dgp = arma(row.phi, betas[b]);
      cell.cfg = base_config(Direction::detect_i0, 50.0, start);
      cell.cv_kind = FunctionalKind::u1;
      cell.expect.rate = Target{row.rate[b], row.phi == 1.0 ? kAlphaTol : kPowerTol};
      cell.expect.arl = Target{row.arl[b], kLengthTol};
      if (row.carl) cell.expect.carl = Target{row.carl[b], kLengthTol};
      cell.expect.gating = true;
      table.cells.push_back(std::move(cell));
    }
  }
  return table;
}

TableReplication table2() {
  TableReplication table;
  table.table_id = 2;
  const double betas[] = {-0.8, -0.5, 0.0, 0.5};
  const std::size_t start = MonitorConfig::default_start(50.0);

  // Size rows under white noise, one per lag rule. The study found rates at
  // or below nominal, with strong conservativeness at beta = 0.5.
  const LagRule size_rules[] = {LagRule::m3(), LagRule::m4(), LagRule::m12()};
  for (const auto& rule : size_rules) {
    for (double beta : betas) {
      TableCell cell;
      cell.row_label = "phi=0 [" + rule.name() + "]";
      cell.col_label = "beta=" + num_label(beta);
      cell.dgp = arma(0.0, beta);
      cell.cfg = base_config(Direction::detect_i1, 50.0, start);
      cell.cfg.lag = rule;
      cell.cv_kind = FunctionalKind::u2_tilde;
      cell.expect.rate_max = beta > 0.0 ? 0.02 : 0.06;
      cell.expect.gating = true;
      table.cells.push_back(std::move(cell));
    }
  }

  struct Row {
    double phi;
    double rate[4];
    const double* carl;
    const double* arl;
  };
  static const double arl02[] = {173.2, 173.3, 173.7, 174.8};
  static const double arl06[] = {170.4, 170.3, 171.0, 173.2};
  static const double arl09[] = {140.0, 139.7, 140.6, 144.9};
  static const double carl1[] = {51.3, 51.3, 51.3, 51.0};
  static const Row rows[] = {
      {0.2, {0.039, 0.038, 0.03, 0.005}, nullptr, arl02},
      {0.6, {0.082, 0.083, 0.074, 0.039}, nullptr, arl06},
      {0.9, {0.396, 0.399, 0.391, 0.358}, nullptr, arl09},
      {1.0, {0.952, 0.953, 0.955, 0.951}, carl1, nullptr},
  };
  for (const auto& row : rows) {
    for (int b = 0; b < 4; ++b) {
      TableCell cell;
      cell.row_label = "phi=" + num_label(row.phi) + " [m4]";
      cell.col_label = "beta=" + num_label(betas[b]);
      cell.dgp = arma(row.phi, betas[b]);
      cell.cfg = base_config(Direction::detect_i1, 50.0, start);
      cell.cv_kind = FunctionalKind::u2_tilde;
      if (row.phi == 1.0) {
        // Gating per the published unit-root row: power within [0.93, 0.97],
        // run length since start within +-3.
        cell.expect.rate_min = 0.93;
        cell.expect.rate_max = 0.97;
        cell.expect.carl = Target{row.carl[b], 3.0};
        cell.expect.gating = true;
      } else {
        cell.expect.rate = Target{row.rate[b], kPowerTol};
        if (row.arl) cell.expect.arl = Target{row.arl[b], kLengthTol};
      }
      table.cells.push_back(std::move(cell));
    }
  }
  return table;
}

std::size_t changepoint_start(const ReplicationOptions& options, double bandwidth) {
  if (options.changepoint_start) return *options.changepoint_start;
  return static_cast<std::size_t>(bandwidth);  // k = h
}

TableReplication table3(const ReplicationOptions& options) {
  TableReplication table;
  table.table_id = 3;
  const double thetas[] = {0.1, 0.5, 0.75};

  struct Row {
    double h;
    double rate[3];
    double cond[3];
    double avg[3];
  };
  static const Row rows[] = {
      {125.0, {0.385, 0.072, 0.066}, {133.2, 54.6, 41.7}, {189.7, 119.9, 60.3}},
      {50.0, {0.293, 0.051, 0.055}, {112.6, 39.4, 21.7}, {192.0, 120.2, 60.1}},
      {25.0, {0.247, 0.041, 0.046}, {113.5, 37.4, 15.4}, {197.4, 120.9, 60.4}},
      {10.0, {0.208, 0.031, 0.037}, {117.3, 40.0, 13.8}, {202.6, 121.9, 60.8}},
  };

  for (const auto& row : rows) {
    for (int t = 0; t < 3; ++t) {
      TableCell cell;
      cell.row_label = "h=" + num_label(row.h);
      cell.col_label = "theta=" + num_label(thetas[t]);
      DgpSpec dgp;
      dgp.kind = DgpSpec::Kind::cp_i1_to_i0;
      dgp.length = kHorizon;
      dgp.theta = thetas[t];
      dgp.phi_post = 0.5;
      dgp.variant = ChangeVariant::ar_switch;
      cell.dgp = dgp;
      cell.cfg = base_config(Direction::detect_i0, row.h, changepoint_start(options, row.h));
      cell.cv_kind = FunctionalKind::u1;
      cell.expect.rate = Target{row.rate[t], kCpRateTol};
      cell.expect.cond_delay = Target{row.cond[t], kLengthTol};
      cell.expect.avg_delay = Target{row.avg[t], kLengthTol};
      cell.expect.gating = row.h == 50.0 && thetas[t] == 0.5;
      table.cells.push_back(std::move(cell));
    }
  }
  return table;
}

TableReplication table4(const ReplicationOptions& options) {
  TableReplication table;
  table.table_id = 4;
  const double thetas[] = {0.1, 0.5, 0.75};

  struct Row {
    double h;
    double rate[3];
    double cond[3];
    double avg[3];
  };
  static const Row rows[] = {
      {125.0, {0.94, 0.744, 0.155}, {123.7, 87.9, 49.7}, {129.8, 97.4, 58.5}},
      {50.0, {0.966, 0.854, 0.468}, {103.2, 74.0, 49.4}, {107.4, 80.6, 53.7}},
      {25.0, {0.972, 0.895, 0.628}, {94.8, 65.0, 44.3}, {98.5, 70.4, 48.4}},
      {10.0, {0.974, 0.913, 0.702}, {89.8, 58.2, 39.4}, {93.4, 63.1, 43.8}},
  };

  for (const auto& row : rows) {
    for (int t = 0; t < 3; ++t) {
      TableCell cell;
      cell.row_label = "h=" + num_label(row.h);
      cell.col_label = "theta=" + num_label(thetas[t]);
      DgpSpec dgp;
      dgp.kind = DgpSpec::Kind::cp_i0_to_i1;
      dgp.length = kHorizon;
      dgp.theta = thetas[t];
      dgp.phi_pre = 0.6;
      dgp.variant = ChangeVariant::ar_switch;
      cell.dgp = dgp;
      cell.cfg = base_config(Direction::detect_i1, row.h, changepoint_start(options, row.h));
      cell.cfg.lag = LagRule::m4();
      cell.cv_kind = FunctionalKind::u2_tilde_n;
      cell.expect.rate = Target{row.rate[t], kCpRateTol};
      cell.expect.cond_delay = Target{row.cond[t], kLengthTol};
      cell.expect.avg_delay = Target{row.avg[t], kLengthTol};
      cell.expect.gating = row.h == 25.0 && thetas[t] == 0.5;
      table.cells.push_back(std::move(cell));
    }
  }
  return table;
}

}  // namespace

TableReplication build_table_definition(int table_id, const ReplicationOptions& options) {
  switch (table_id) {
    case 1: return table1();
    case 2: return table2();
    case 3: return table3(options);
    case 4: return table4(options);
    default: throw ConfigError("table id must be 1..4");
  }
}

void evaluate_orderings(TableReplication& table) {
  auto rate = [&table](const std::string& row, const std::string& col) {
    const TableCell* cell = table.find(row, col);
    if (!cell) throw Error("table ordering references a missing cell");
    return cell->rate;
  };
  auto detection = [&table](const std::string& row, const std::string& col) {
    const TableCell* cell = table.find(row, col);
    if (!cell || !cell->report.detection_delay) return std::nan("");
    return *cell->report.detection_delay;
  };

  if (table.table_id == 3) {
    // Wide bandwidths keep overall power high but make the signal late.
    table.orderings.push_back({"power(h=125,theta=0.1) > power(h=25,theta=0.1)",
                               rate("h=125", "theta=0.1") > rate("h=25", "theta=0.1"), true});
    const double d125 = detection("h=125", "theta=0.1");
    const double d25 = detection("h=25", "theta=0.1");
    table.orderings.push_back({"detection_delay(h=125,theta=0.1) > detection_delay(h=25,theta=0.1)",
                               std::isfinite(d125) && std::isfinite(d25) && d125 > d25, true});
  }
  if (table.table_id == 4) {
    const char* hs[] = {"h=125", "h=50", "h=25", "h=10"};
    const char* ts[] = {"theta=0.1", "theta=0.5", "theta=0.75"};
    for (const char* t : ts) {
      for (int i = 0; i + 1 < 4; ++i) {
        table.orderings.push_back(
            {std::string("power(") + hs[i + 1] + "," + t + ") >= power(" + hs[i] + "," + t + ")",
             rate(hs[i + 1], t) >= rate(hs[i], t), true});
      }
    }
    for (const char* h : hs) {
      table.orderings.push_back(
          {std::string("power(") + h + ",theta=0.1) >= power(" + h + ",theta=0.75)",
           rate(h, "theta=0.1") >= rate(h, "theta=0.75"), false});
    }
  }
}

}  // namespace seqmon
