// seqmon: sequential monitoring for unit roots and stationarity.
// Subcommands: calibrate, monitor, simulate, replicate.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "seqmon/calibrate.hpp"
#include "seqmon/errors.hpp"
#include "seqmon/experiments.hpp"
#include "seqmon/io.hpp"

using nlohmann::json;
using namespace seqmon;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("failed writing '" + path + "'");
}

struct CalibrateArgs {
  std::string kind;
  double zeta = 5.0;
  std::string kernel = "epanechnikov";
  double alpha = 0.0;
  double kappa = 0.0;
  std::size_t reps = 50000;
  std::size_t grid = 1000;
  std::uint64_t seed = 42;
  std::string cache = "calibrations.csv";
  unsigned threads = 0;
  double theta = 0.5;
  double ou_a = 0.0;
  double ratio = 1.0;
  std::string direction;
};

LimitFunctionalSpec build_spec(const CalibrateArgs& args) {
  LimitFunctionalSpec spec;
  spec.kind = functional_kind_from_name(args.kind);
  spec.zeta = args.zeta;
  spec.kernel = Kernel::from_name(args.kernel);
  spec.changepoint = args.theta;
  spec.ou_coefficient = args.ou_a;
  spec.nuisance_ratio = args.ratio;
  spec.validate();
  return spec;
}

int cmd_calibrate(const CalibrateArgs& args) {
  auto spec = build_spec(args);
  CalibrationCache cache(args.cache);
  const auto key =
      CalibrationKey::from_spec(spec, args.alpha, args.kappa, args.reps, args.grid, args.seed);
  CalibrationResult result;
  if (auto hit = cache.lookup(key)) {
    result = *hit;
  } else {
    const Direction direction = args.direction.empty()
                                    ? default_direction(spec.kind)
                                    : direction_from_name(args.direction);
    result = calibrate(spec, direction, args.alpha, args.kappa, args.reps, args.grid,
                       args.seed, args.threads);
    cache.insert(key, result);
  }
  std::cout << "kind,zeta,kernel,alpha,kappa,R,G,seed,c,se\n"
            << key.kind << ',' << fmt17(key.zeta) << ',' << key.kernel << ','
            << fmt17(key.alpha) << ',' << fmt17(key.kappa) << ',' << key.replications << ','
            << key.grid << ',' << key.seed << ',' << fmt17(result.control_limit) << ','
            << fmt17(result.quantile_se) << "\n";
  return kExitOk;
}

struct MonitorArgs {
  std::string input;
  std::string direction;
  double bandwidth = 0.0;
  std::string kernel = "epanechnikov";
  std::string lag = "m4";
  std::optional<double> control_limit;
  double alpha = 0.05;
  std::optional<std::size_t> start;
  std::optional<double> kappa;
  std::optional<double> zeta;
  std::string residuals = "none";
  std::string residual_window = "full";
  std::string trace_path;
  std::string cache = "calibrations.csv";
  bool auto_calibrate = false;
  std::size_t calib_reps = 50000;
  std::size_t grid = 1000;
  std::uint64_t calib_seed = 42;
  std::string cv_kind;  // defaults by direction
  unsigned threads = 0;
};

int cmd_monitor(const MonitorArgs& args) {
  const auto series = read_series(args.input);
  const std::size_t horizon = series.size();

  MonitorConfig cfg;
  cfg.direction = direction_from_name(args.direction);
  cfg.horizon = horizon;
  cfg.kernel = KernelSpec{Kernel::from_name(args.kernel), args.bandwidth};
  cfg.lag = LagRule::from_name(args.lag);
  cfg.residuals = residual_mode_from_name(args.residuals);
  cfg.residual_window =
      args.residual_window == "expanding" ? ResidualWindow::expanding : ResidualWindow::full;
  if (args.start) {
    cfg.start = *args.start;
  } else if (args.kappa) {
    cfg.start = static_cast<std::size_t>(std::floor(*args.kappa * horizon));
  } else {
    cfg.start = MonitorConfig::default_start(args.bandwidth);
  }

  const double derived_zeta = static_cast<double>(horizon) / args.bandwidth;
  double zeta = derived_zeta;
  if (args.zeta) {
    zeta = *args.zeta;
    const double gap = std::fabs(zeta - derived_zeta) / std::max(zeta, derived_zeta);
    if (gap > 0.10) {
      std::cerr << "warning: --zeta " << zeta << " differs from N/h = " << derived_zeta
                << " by more than 10%\n";
    }
  }

  if (args.control_limit) {
    cfg.control_limit = *args.control_limit;
  } else {
    LimitFunctionalSpec spec;
    spec.kind = args.cv_kind.empty()
                    ? (cfg.direction == Direction::detect_i0 ? FunctionalKind::u1
                                                             : FunctionalKind::u2_tilde)
                    : functional_kind_from_name(args.cv_kind);
    spec.zeta = zeta;
    spec.kernel = cfg.kernel.shape;
    const double kappa = static_cast<double>(cfg.start) / static_cast<double>(horizon);
    CalibrationCache cache(args.cache);
    const auto key = CalibrationKey::from_spec(spec, args.alpha, kappa, args.calib_reps,
                                               args.grid, args.calib_seed);
    if (auto hit = cache.lookup(key)) {
      cfg.control_limit = hit->control_limit;
    } else if (args.auto_calibrate) {
      cfg.control_limit = load_or_calibrate(cache, spec, args.alpha, kappa, args.calib_reps,
                                            args.grid, args.calib_seed, args.threads)
                              .control_limit;
    } else {
      throw MissingCalibration(
          "no cached control limit; run `seqmon calibrate --kind " + key.kind + " --zeta " +
          std::to_string(key.zeta) + " --kernel " + key.kernel + " --alpha " +
          std::to_string(args.alpha) + " --kappa " + std::to_string(kappa) +
          "` first, pass --c explicitly, or use --auto-calibrate");
    }
  }

  const auto result = run_monitor(series, cfg);
  if (!args.trace_path.empty()) {
    std::string text = "n,value\n";
    for (const auto& [n, value] : result.trace) {
      text += std::to_string(n) + "," + fmt17(value) + "\n";
    }
    write_file(args.trace_path, text);
  }
  std::cout << "direction=" << direction_name(cfg.direction) << " N=" << horizon
            << " k=" << cfg.start << " h=" << args.bandwidth << " c=" << fmt17(cfg.control_limit)
            << "\n";
  if (result.signaled) {
    std::cout << "SIGNAL at n=" << result.stop_index << "\n";
  } else {
    std::cout << "NO SIGNAL (horizon N=" << horizon << ")\n";
  }
  return kExitOk;
}

struct SimulateArgs {
  std::string config_path;
  DgpSpec dgp;
  std::string dgp_kind = "arma11";
  std::string variant = "ar_switch";
  std::string direction = "i0";
  double bandwidth = 50.0;
  std::string kernel = "epanechnikov";
  std::string lag = "m4";
  std::optional<double> control_limit;
  double alpha = 0.05;
  std::optional<std::size_t> start;
  std::optional<double> kappa;
  std::string residuals = "none";
  std::size_t reps = 10000;
  std::uint64_t seed = 7;
  unsigned threads = 0;
  std::string out;
  std::string cache = "calibrations.csv";
  bool auto_calibrate = false;
  std::size_t calib_reps = 50000;
  std::size_t grid = 1000;
  std::uint64_t calib_seed = 42;
  std::string cv_kind;
};

void apply_json_config(SimulateArgs& args) {
  std::ifstream in(args.config_path);
  if (!in) throw IoError("cannot open config '" + args.config_path + "'");
  json cfg = json::parse(in, nullptr, true, true);
  if (cfg.contains("dgp")) {
    const auto& d = cfg["dgp"];
    if (d.contains("kind")) args.dgp_kind = d["kind"].get<std::string>();
    if (d.contains("n")) args.dgp.length = d["n"].get<std::size_t>();
    if (d.contains("phi")) args.dgp.phi = d["phi"].get<double>();
    if (d.contains("beta")) args.dgp.beta = d["beta"].get<double>();
    if (d.contains("theta")) args.dgp.theta = d["theta"].get<double>();
    if (d.contains("phi_pre")) args.dgp.phi_pre = d["phi_pre"].get<double>();
    if (d.contains("phi_post")) args.dgp.phi_post = d["phi_post"].get<double>();
    if (d.contains("eta")) args.dgp.eta = d["eta"].get<double>();
    if (d.contains("variant")) args.variant = d["variant"].get<std::string>();
    if (d.contains("a")) args.dgp.a = d["a"].get<double>();
    if (d.contains("slope")) args.dgp.slope = d["slope"].get<double>();
  }
  if (cfg.contains("monitor")) {
    const auto& m = cfg["monitor"];
    if (m.contains("direction")) args.direction = m["direction"].get<std::string>();
    if (m.contains("h")) args.bandwidth = m["h"].get<double>();
    if (m.contains("kernel")) args.kernel = m["kernel"].get<std::string>();
    if (m.contains("lag")) args.lag = m["lag"].get<std::string>();
    if (m.contains("c")) args.control_limit = m["c"].get<double>();
    if (m.contains("alpha")) args.alpha = m["alpha"].get<double>();
    if (m.contains("start")) args.start = m["start"].get<std::size_t>();
    if (m.contains("kappa")) args.kappa = m["kappa"].get<double>();
    if (m.contains("residuals")) args.residuals = m["residuals"].get<std::string>();
    if (m.contains("cv_kind")) args.cv_kind = m["cv_kind"].get<std::string>();
  }
  if (cfg.contains("reps")) args.reps = cfg["reps"].get<std::size_t>();
  if (cfg.contains("seed")) args.seed = cfg["seed"].get<std::uint64_t>();
  if (cfg.contains("threads")) args.threads = cfg["threads"].get<unsigned>();
  if (cfg.contains("out")) args.out = cfg["out"].get<std::string>();
  if (cfg.contains("cache")) args.cache = cfg["cache"].get<std::string>();
  if (cfg.contains("auto_calibrate")) args.auto_calibrate = cfg["auto_calibrate"].get<bool>();
  if (cfg.contains("calib_reps")) args.calib_reps = cfg["calib_reps"].get<std::size_t>();
  if (cfg.contains("grid")) args.grid = cfg["grid"].get<std::size_t>();
  if (cfg.contains("calib_seed")) args.calib_seed = cfg["calib_seed"].get<std::uint64_t>();
}

int cmd_simulate(SimulateArgs& args) {
  args.dgp.kind = DgpSpec::kind_from_name(args.dgp_kind);
  args.dgp.variant =
      args.variant == "partial_sum" ? ChangeVariant::partial_sum : ChangeVariant::ar_switch;
  args.dgp.validate();

  MonitorConfig cfg;
  cfg.direction = direction_from_name(args.direction);
  cfg.horizon = args.dgp.length;
  cfg.kernel = KernelSpec{Kernel::from_name(args.kernel), args.bandwidth};
  cfg.lag = LagRule::from_name(args.lag);
  cfg.residuals = residual_mode_from_name(args.residuals);
  if (args.start) {
    cfg.start = *args.start;
  } else if (args.kappa) {
    cfg.start = static_cast<std::size_t>(std::floor(*args.kappa * cfg.horizon));
  } else {
    cfg.start = MonitorConfig::default_start(args.bandwidth);
  }

  if (args.control_limit) {
    cfg.control_limit = *args.control_limit;
  } else {
    LimitFunctionalSpec spec;
    spec.kind = args.cv_kind.empty()
                    ? (cfg.direction == Direction::detect_i0 ? FunctionalKind::u1
                                                             : FunctionalKind::u2_tilde)
                    : functional_kind_from_name(args.cv_kind);
    spec.zeta = static_cast<double>(cfg.horizon) / args.bandwidth;
    spec.kernel = cfg.kernel.shape;
    const double kappa = static_cast<double>(cfg.start) / static_cast<double>(cfg.horizon);
    CalibrationCache cache(args.cache);
    const auto key = CalibrationKey::from_spec(spec, args.alpha, kappa, args.calib_reps,
                                               args.grid, args.calib_seed);
    if (auto hit = cache.lookup(key)) {
      cfg.control_limit = hit->control_limit;
    } else if (args.auto_calibrate) {
      cfg.control_limit = load_or_calibrate(cache, spec, args.alpha, kappa, args.calib_reps,
                                            args.grid, args.calib_seed, args.threads)
                              .control_limit;
    } else {
      throw MissingCalibration("no cached control limit for kind=" + key.kind +
                               "; run `seqmon calibrate` first or pass --auto-calibrate");
    }
  }

  const auto report = args.dgp.has_changepoint()
                          ? run_changepoint(args.dgp, cfg, args.reps, args.seed, args.threads)
                          : run_size_power(args.dgp, cfg, args.reps, args.seed, args.threads);
  const auto csv = report_csv(report);
  std::cout << csv;
  if (!args.out.empty()) write_file(args.out, csv);
  return kExitOk;
}

struct ReplicateArgs {
  int table = 1;
  ReplicationOptions options;
  std::string cache = "calibrations.csv";
  std::string out;
  std::optional<std::size_t> changepoint_start;
};

int cmd_replicate(ReplicateArgs& args) {
  CalibrationCache cache(args.cache);
  args.options.changepoint_start = args.changepoint_start;
  const auto table = replicate_table(args.table, cache, args.options);
  std::cout << format_table(table);
  if (!args.out.empty()) {
    write_file(args.out + "_table" + std::to_string(args.table) + ".csv", table_csv(table));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequential monitoring procedures to detect unit roots and stationarity"};
  // --h is a domain flag (bandwidth), so help is long-form only.
  app.set_help_flag("--help", "Print help");
  app.require_subcommand(1);

  CalibrateArgs cal;
  auto* calibrate_cmd =
      app.add_subcommand("calibrate", "Simulate a limit law and store its control limit");
  calibrate_cmd->add_option("--kind", cal.kind, "functional kind (u1, u2, u2_tilde, ...)")
      ->required();
  calibrate_cmd->add_option("--zeta", cal.zeta, "N/h limit parameter (>= 1)")->required();
  calibrate_cmd->add_option("--kernel", cal.kernel, "gaussian | epanechnikov");
  calibrate_cmd->add_option("--alpha", cal.alpha, "nominal level in (0,1)")->required();
  calibrate_cmd->add_option("--kappa", cal.kappa, "start fraction in (0,1)")->required();
  calibrate_cmd->add_option("--reps", cal.reps, "Monte Carlo replications");
  calibrate_cmd->add_option("--grid", cal.grid, "path grid size");
  calibrate_cmd->add_option("--seed", cal.seed, "master seed");
  calibrate_cmd->add_option("--cache", cal.cache, "calibration cache CSV path");
  calibrate_cmd->add_option("--threads", cal.threads, "worker threads (0 = all)");
  calibrate_cmd->add_option("--theta", cal.theta, "change fraction for u01/u10");
  calibrate_cmd->add_option("--a", cal.ou_a, "local-to-unity coefficient for uz");
  calibrate_cmd->add_option("--ratio", cal.ratio, "nuisance variance ratio for u2");
  calibrate_cmd->add_option("--direction", cal.direction,
                            "i0 | i1 (defaults to the kind's natural direction)");

  MonitorArgs mon;
  auto* monitor_cmd = app.add_subcommand("monitor", "Run the stopping rule over a series file");
  monitor_cmd->set_help_flag("--help", "Print help");
  monitor_cmd->add_option("--input", mon.input, "series file, one observation per line")
      ->required();
  monitor_cmd->add_option("--direction", mon.direction, "i0 (detect stationarity) | i1")
      ->required();
  monitor_cmd->add_option("--h", mon.bandwidth, "kernel bandwidth in observations")->required();
  monitor_cmd->add_option("--kernel", mon.kernel, "gaussian | epanechnikov");
  monitor_cmd->add_option("--lag", mon.lag, "m3 | m4 | m12 | fixed:M");
  monitor_cmd->add_option("--c", mon.control_limit, "explicit control limit");
  monitor_cmd->add_option("--alpha", mon.alpha, "level used to resolve c from the cache");
  monitor_cmd->add_option("--start", mon.start, "start of monitoring k");
  monitor_cmd->add_option("--kappa", mon.kappa, "start fraction (k = floor(kappa N))");
  monitor_cmd->add_option("--zeta", mon.zeta, "override zeta (warns when far from N/h)");
  monitor_cmd->add_option("--residuals", mon.residuals, "none | demeaned | detrended");
  monitor_cmd->add_option("--residual-window", mon.residual_window, "full | expanding");
  monitor_cmd->add_option("--trace", mon.trace_path, "write the statistic trace CSV here");
  monitor_cmd->add_option("--cache", mon.cache, "calibration cache CSV path");
  monitor_cmd->add_flag("--auto-calibrate", mon.auto_calibrate,
                        "calibrate on a cache miss instead of failing");
  monitor_cmd->add_option("--calib-reps", mon.calib_reps, "calibration replications");
  monitor_cmd->add_option("--grid", mon.grid, "calibration grid");
  monitor_cmd->add_option("--calib-seed", mon.calib_seed, "calibration seed");
  monitor_cmd->add_option("--cv-kind", mon.cv_kind, "override the limit law for the control limit");
  monitor_cmd->add_option("--threads", mon.threads, "worker threads");

  SimulateArgs sim;
  auto* simulate_cmd =
      app.add_subcommand("simulate", "Monte Carlo size/power/delay experiment for one model");
  simulate_cmd->set_help_flag("--help", "Print help");
  simulate_cmd->add_option("--config", sim.config_path, "JSON experiment config");
  simulate_cmd->add_option("--dgp", sim.dgp_kind,
                           "arma11 | cp_i1_to_i0 | cp_i0_to_i1 | local_to_unity | local_trend");
  simulate_cmd->add_option("--n", sim.dgp.length, "series length N");
  simulate_cmd->add_option("--phi", sim.dgp.phi, "AR parameter");
  simulate_cmd->add_option("--beta", sim.dgp.beta, "MA parameter");
  simulate_cmd->add_option("--theta", sim.dgp.theta, "change fraction");
  simulate_cmd->add_option("--phi-pre", sim.dgp.phi_pre, "pre-change AR parameter");
  simulate_cmd->add_option("--phi-post", sim.dgp.phi_post, "post-change AR parameter");
  simulate_cmd->add_option("--eta", sim.dgp.eta, "post-change scale (partial_sum variant)");
  simulate_cmd->add_option("--variant", sim.variant, "ar_switch | partial_sum");
  simulate_cmd->add_option("--a", sim.dgp.a, "local-to-unity coefficient");
  simulate_cmd->add_option("--slope", sim.dgp.slope, "local trend slope");
  simulate_cmd->add_option("--direction", sim.direction, "i0 | i1");
  simulate_cmd->add_option("--h", sim.bandwidth, "kernel bandwidth");
  simulate_cmd->add_option("--kernel", sim.kernel, "gaussian | epanechnikov");
  simulate_cmd->add_option("--lag", sim.lag, "lag rule");
  simulate_cmd->add_option("--c", sim.control_limit, "explicit control limit");
  simulate_cmd->add_option("--alpha", sim.alpha, "level for cache resolution");
  simulate_cmd->add_option("--start", sim.start, "start of monitoring k");
  simulate_cmd->add_option("--kappa", sim.kappa, "start fraction");
  simulate_cmd->add_option("--residuals", sim.residuals, "none | demeaned | detrended");
  simulate_cmd->add_option("--reps", sim.reps, "replications");
  simulate_cmd->add_option("--seed", sim.seed, "master seed");
  simulate_cmd->add_option("--threads", sim.threads, "worker threads");
  simulate_cmd->add_option("--out", sim.out, "report CSV path");
  simulate_cmd->add_option("--cache", sim.cache, "calibration cache CSV path");
  simulate_cmd->add_flag("--auto-calibrate", sim.auto_calibrate, "calibrate on a cache miss");
  simulate_cmd->add_option("--calib-reps", sim.calib_reps, "calibration replications");
  simulate_cmd->add_option("--grid", sim.grid, "calibration grid");
  simulate_cmd->add_option("--calib-seed", sim.calib_seed, "calibration seed");
  simulate_cmd->add_option("--cv-kind", sim.cv_kind, "override the limit law");

  ReplicateArgs rep;
  auto* replicate_cmd =
      app.add_subcommand("replicate", "Reproduce a simulation-study table with comparisons");
  replicate_cmd->add_option("--table", rep.table, "table id (1-4)")->required();
  replicate_cmd->add_option("--reps", rep.options.replications, "replications per cell");
  replicate_cmd->add_option("--seed", rep.options.seed, "master seed");
  replicate_cmd->add_option("--threads", rep.options.threads, "worker threads");
  replicate_cmd->add_option("--cache", rep.cache, "calibration cache CSV path");
  replicate_cmd->add_flag("--auto-calibrate", rep.options.auto_calibrate,
                          "calibrate missing control limits");
  replicate_cmd->add_option("--calib-reps", rep.options.calibration_replications,
                            "calibration replications");
  replicate_cmd->add_option("--grid", rep.options.calibration_grid, "calibration grid");
  replicate_cmd->add_option("--calib-seed", rep.options.calibration_seed, "calibration seed");
  replicate_cmd->add_option("--changepoint-start", rep.changepoint_start,
                            "override the start of monitoring for tables 3-4");
  replicate_cmd->add_option("--out", rep.out, "output prefix for the table CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*calibrate_cmd) return cmd_calibrate(cal);
    if (*monitor_cmd) return cmd_monitor(mon);
    if (*simulate_cmd) {
      if (!sim.config_path.empty()) {
        // JSON config provides the baseline; flags passed on the command
        // line win over it.
        SimulateArgs merged = sim;
        apply_json_config(merged);
        auto passed = [&](const std::string& name) {
          return simulate_cmd->count(name) > 0;
        };
        if (passed("--dgp")) merged.dgp_kind = sim.dgp_kind;
        if (passed("--n")) merged.dgp.length = sim.dgp.length;
        if (passed("--phi")) merged.dgp.phi = sim.dgp.phi;
        if (passed("--beta")) merged.dgp.beta = sim.dgp.beta;
        if (passed("--theta")) merged.dgp.theta = sim.dgp.theta;
        if (passed("--phi-pre")) merged.dgp.phi_pre = sim.dgp.phi_pre;
        if (passed("--phi-post")) merged.dgp.phi_post = sim.dgp.phi_post;
        if (passed("--eta")) merged.dgp.eta = sim.dgp.eta;
        if (passed("--variant")) merged.variant = sim.variant;
        if (passed("--a")) merged.dgp.a = sim.dgp.a;
        if (passed("--slope")) merged.dgp.slope = sim.dgp.slope;
        if (passed("--direction")) merged.direction = sim.direction;
        if (passed("--h")) merged.bandwidth = sim.bandwidth;
        if (passed("--kernel")) merged.kernel = sim.kernel;
        if (passed("--lag")) merged.lag = sim.lag;
        if (passed("--c")) merged.control_limit = sim.control_limit;
        if (passed("--alpha")) merged.alpha = sim.alpha;
        if (passed("--start")) merged.start = sim.start;
        if (passed("--kappa")) merged.kappa = sim.kappa;
        if (passed("--residuals")) merged.residuals = sim.residuals;
        if (passed("--reps")) merged.reps = sim.reps;
        if (passed("--seed")) merged.seed = sim.seed;
        if (passed("--threads")) merged.threads = sim.threads;
        if (passed("--out")) merged.out = sim.out;
        if (passed("--cache")) merged.cache = sim.cache;
        if (passed("--auto-calibrate")) merged.auto_calibrate = sim.auto_calibrate;
        if (passed("--calib-reps")) merged.calib_reps = sim.calib_reps;
        if (passed("--grid")) merged.grid = sim.grid;
        if (passed("--calib-seed")) merged.calib_seed = sim.calib_seed;
        if (passed("--cv-kind")) merged.cv_kind = sim.cv_kind;
        return cmd_simulate(merged);
      }
      return cmd_simulate(sim);
    }
    if (*replicate_cmd) return cmd_replicate(rep);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
