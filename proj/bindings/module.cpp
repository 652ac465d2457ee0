#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seqmon/calibrate.hpp"
#include "seqmon/dgp.hpp"
#include "seqmon/errors.hpp"
#include "seqmon/experiments.hpp"
#include "seqmon/io.hpp"
#include "seqmon/stopping.hpp"

namespace py = pybind11;
using namespace seqmon;

namespace {

KernelSpec make_kernel(const std::string& name, double bandwidth) {
  return KernelSpec{Kernel::from_name(name), bandwidth};
}

MonitorConfig make_config(const std::string& direction, double control_limit,
                          std::size_t horizon, std::size_t start, const std::string& kernel,
                          double bandwidth, const std::string& lag,
                          const std::string& residuals, const std::string& residual_window) {
  MonitorConfig cfg;
  cfg.direction = direction_from_name(direction);
  cfg.control_limit = control_limit;
  cfg.horizon = horizon;
  cfg.start = start;
  cfg.kernel = make_kernel(kernel, bandwidth);
  cfg.lag = LagRule::from_name(lag);
  cfg.residuals = residual_mode_from_name(residuals);
  cfg.residual_window =
      residual_window == "expanding" ? ResidualWindow::expanding : ResidualWindow::full;
  return cfg;
}

LimitFunctionalSpec make_functional(const std::string& kind, double zeta,
                                    const std::string& kernel, double nuisance_ratio,
                                    double ou_coefficient, double changepoint) {
  LimitFunctionalSpec spec;
  spec.kind = functional_kind_from_name(kind);
  spec.zeta = zeta;
  spec.kernel = Kernel::from_name(kernel);
  spec.nuisance_ratio = nuisance_ratio;
  spec.ou_coefficient = ou_coefficient;
  spec.changepoint = changepoint;
  spec.validate();
  return spec;
}

DgpSpec make_dgp(const std::string& kind, std::size_t length, double phi, double beta,
                 double theta, double phi_pre, double phi_post, double eta,
                 const std::string& variant, double a, double slope) {
  DgpSpec spec;
  spec.kind = DgpSpec::kind_from_name(kind);
  spec.length = length;
  spec.phi = phi;
  spec.beta = beta;
  spec.theta = theta;
  spec.phi_pre = phi_pre;
  spec.phi_post = phi_post;
  spec.eta = eta;
  spec.variant = variant == "partial_sum" ? ChangeVariant::partial_sum : ChangeVariant::ar_switch;
  spec.a = a;
  spec.slope = slope;
  spec.validate();
  return spec;
}

py::dict report_dict(const ExperimentReport& report) {
  py::dict out;
  out["replications"] = report.replications;
  out["rejection_rate"] = report.rejection_rate;
  out["rejection_se"] = report.rejection_se;
  out["arl"] = report.arl;
  out["arl_se"] = report.arl_se;
  out["carl"] = report.carl ? py::object(py::float_(*report.carl)) : py::none();
  out["carl_se"] = report.carl_se ? py::object(py::float_(*report.carl_se)) : py::none();
  out["avg_delay"] =
      report.avg_delay ? py::object(py::float_(*report.avg_delay)) : py::none();
  out["cond_delay"] =
      report.cond_delay ? py::object(py::float_(*report.cond_delay)) : py::none();
  out["detection_delay"] = report.detection_delay
                               ? py::object(py::float_(*report.detection_delay))
                               : py::none();
  out["changepoint_index"] = report.changepoint_index;
  out["dgp"] = report.dgp;
  out["direction"] = report.direction;
  out["horizon"] = report.horizon;
  out["start"] = report.start;
  out["control_limit"] = report.control_limit;
  out["seed"] = report.seed;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sequential monitoring procedures to detect unit roots and stationarity";

  py::register_exception<DegenerateDenominator>(m, "DegenerateDenominator");
  py::register_exception<MissingCalibration>(m, "MissingCalibrationError");
  static py::exception<Error> base_error(m, "SeqmonError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ConfigError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const InvalidLag& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const InsufficientData& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "kernel_value",
      [](const std::string& kernel, double z) { return Kernel::from_name(kernel)(z); },
      py::arg("kernel"), py::arg("z"), "Evaluate the kernel shape K(z)");
  m.def(
      "scaled_weight",
      [](const std::string& kernel, double bandwidth, double x) {
        return scaled_weight(make_kernel(kernel, bandwidth), x);
      },
      py::arg("kernel"), py::arg("bandwidth"), py::arg("x"), "K(x/h)/h");

  m.def(
      "u_stat",
      [](const std::vector<double>& series, std::size_t n, const std::string& kernel,
         double bandwidth) {
        auto w = TimeSeriesWindow::from_series(series);
        return u_stat(w, n == 0 ? series.size() : n, make_kernel(kernel, bandwidth));
      },
      py::arg("series"), py::arg("n") = 0, py::arg("kernel") = "epanechnikov",
      py::arg("bandwidth") = 50.0,
      "Variance-ratio detection statistic at index n (default: the full series)");

  m.def(
      "u_tilde_stat",
      [](const std::vector<double>& series, std::size_t n, std::size_t horizon,
         const std::string& kernel, double bandwidth, const std::string& lag) {
        const std::size_t at = n == 0 ? series.size() : n;
        const std::size_t full = horizon == 0 ? series.size() : horizon;
        auto w = TimeSeriesWindow::from_series(series, full);
        return u_tilde_stat(w, at, full, make_kernel(kernel, bandwidth), LagRule::from_name(lag));
      },
      py::arg("series"), py::arg("n") = 0, py::arg("horizon") = 0,
      py::arg("kernel") = "epanechnikov", py::arg("bandwidth") = 50.0, py::arg("lag") = "m4",
      "Normalized detection statistic at index n");

  m.def(
      "newey_west",
      [](const std::vector<double>& series, std::size_t n, std::size_t m, std::size_t horizon) {
        auto w = TimeSeriesWindow::from_series(series, horizon == 0 ? series.size() : horizon);
        return newey_west(w, n == 0 ? series.size() : n, m,
                          horizon == 0 ? series.size() : horizon);
      },
      py::arg("series"), py::arg("n") = 0, py::arg("m") = 0, py::arg("horizon") = 0,
      "Horizon-normalized Bartlett long-run variance process");

  m.def(
      "resolve_lag",
      [](const std::string& rule, std::size_t n) { return resolve_lag(LagRule::from_name(rule), n); },
      py::arg("rule"), py::arg("n"));

  m.def(
      "apply_residual_mode",
      [](const std::vector<double>& series, const std::string& mode) {
        return apply_residual_mode(series, residual_mode_from_name(mode));
      },
      py::arg("series"), py::arg("mode"), "none | demeaned | detrended");

  m.def(
      "run_monitor",
      [](const std::vector<double>& series, const std::string& direction, double control_limit,
         std::size_t start, const std::string& kernel, double bandwidth, const std::string& lag,
         const std::string& residuals, const std::string& residual_window, bool with_trace) {
        auto cfg = make_config(direction, control_limit, series.size(), start, kernel,
                               bandwidth, lag, residuals, residual_window);
        auto result = run_monitor(series, cfg);
        py::dict out;
        out["stop_index"] = result.stop_index;
        out["signaled"] = result.signaled;
        if (with_trace) out["trace"] = result.trace;
        return out;
      },
      py::arg("series"), py::arg("direction"), py::arg("control_limit"), py::arg("start"),
      py::arg("kernel") = "epanechnikov", py::arg("bandwidth") = 50.0, py::arg("lag") = "m4",
      py::arg("residuals") = "none", py::arg("residual_window") = "full",
      py::arg("with_trace") = false,
      "Run the truncated stopping rule over a full series");

  m.def(
      "simulate_bm",
      [](std::size_t grid, std::uint64_t seed, std::uint64_t stream) {
        RngStream rng(seed, stream);
        return simulate_bm(grid, rng).values;
      },
      py::arg("grid"), py::arg("seed"), py::arg("stream") = 0);
  m.def(
      "simulate_ou",
      [](double a, std::size_t grid, std::uint64_t seed, std::uint64_t stream) {
        RngStream rng(seed, stream);
        return simulate_ou(a, grid, rng).values;
      },
      py::arg("a"), py::arg("grid"), py::arg("seed"), py::arg("stream") = 0);
  m.def(
      "to_bridge_mu",
      [](const std::vector<double>& values) {
        SamplePath path{PathTag::bm, 0.0, values};
        return to_bridge_mu(path).values;
      },
      py::arg("values"));
  m.def(
      "to_detrended",
      [](const std::vector<double>& values) {
        SamplePath path{PathTag::bm, 0.0, values};
        return to_detrended_t(path).values;
      },
      py::arg("values"));

  m.def(
      "eval_functional",
      [](const std::string& kind, const std::vector<double>& path_values, double s, double zeta,
         const std::string& kernel, double nuisance_ratio, double ou_coefficient,
         double changepoint) {
        auto spec = make_functional(kind, zeta, kernel, nuisance_ratio, ou_coefficient,
                                    changepoint);
        SamplePath path{spec.required_path(), ou_coefficient, path_values};
        return eval_functional(spec, path, s);
      },
      py::arg("kind"), py::arg("path"), py::arg("s"), py::arg("zeta") = 5.0,
      py::arg("kernel") = "epanechnikov", py::arg("nuisance_ratio") = 1.0,
      py::arg("ou_coefficient") = 0.0, py::arg("changepoint") = 0.5,
      "Evaluate a limiting functional on a discretized path");

  m.def(
      "calibrate",
      [](const std::string& kind, double zeta, const std::string& kernel, double alpha,
         double kappa, std::size_t replications, std::size_t grid, std::uint64_t seed,
         unsigned threads, double nuisance_ratio, double ou_coefficient, double changepoint) {
        auto spec = make_functional(kind, zeta, kernel, nuisance_ratio, ou_coefficient,
                                    changepoint);
        auto result = calibrate(spec, default_direction(spec.kind), alpha, kappa, replications,
                                grid, seed, threads);
        py::dict out;
        out["control_limit"] = result.control_limit;
        out["alpha"] = result.alpha;
        out["kappa"] = result.kappa;
        out["replications"] = result.replications;
        out["grid"] = result.grid;
        out["quantile_se"] = result.quantile_se;
        out["seed"] = result.seed;
        return out;
      },
      py::arg("kind"), py::arg("zeta"), py::arg("kernel") = "epanechnikov",
      py::arg("alpha") = 0.05, py::arg("kappa") = 0.3, py::arg("replications") = 50000,
      py::arg("grid") = 1000, py::arg("seed") = 42, py::arg("threads") = 0,
      py::arg("nuisance_ratio") = 1.0, py::arg("ou_coefficient") = 0.0,
      py::arg("changepoint") = 0.5,
      "Monte Carlo control limit for a limiting law");

  m.def(
      "generate",
      [](const std::string& kind, std::size_t length, std::uint64_t seed, std::uint64_t stream,
         double phi, double beta, double theta, double phi_pre, double phi_post, double eta,
         const std::string& variant, double a, double slope) {
        auto spec = make_dgp(kind, length, phi, beta, theta, phi_pre, phi_post, eta, variant, a,
                             slope);
        RngStream rng(seed, stream);
        return generate(spec, rng);
      },
      py::arg("kind"), py::arg("length"), py::arg("seed"), py::arg("stream") = 0,
      py::arg("phi") = 0.0, py::arg("beta") = 0.0, py::arg("theta") = 0.5,
      py::arg("phi_pre") = 0.6, py::arg("phi_post") = 0.5, py::arg("eta") = 1.0,
      py::arg("variant") = "ar_switch", py::arg("a") = 0.0, py::arg("slope") = 1.0,
      "Draw one synthetic series from a named model");

  m.def(
      "run_size_power",
      [](const std::string& dgp_kind, std::size_t length, double phi, double beta, double theta,
         double phi_pre, double phi_post, const std::string& variant, const std::string& direction,
         double control_limit, std::size_t start, const std::string& kernel, double bandwidth,
         const std::string& lag, std::size_t replications, std::uint64_t seed, unsigned threads) {
        auto dgp = make_dgp(dgp_kind, length, phi, beta, theta, phi_pre, phi_post, 1.0, variant,
                            0.0, 1.0);
        auto cfg = make_config(direction, control_limit, length, start, kernel, bandwidth, lag,
                               "none", "full");
        const auto report = dgp.has_changepoint()
                                ? run_changepoint(dgp, cfg, replications, seed, threads)
                                : run_size_power(dgp, cfg, replications, seed, threads);
        return report_dict(report);
      },
      py::arg("dgp"), py::arg("length"), py::arg("phi") = 0.0, py::arg("beta") = 0.0,
      py::arg("theta") = 0.5, py::arg("phi_pre") = 0.6, py::arg("phi_post") = 0.5,
      py::arg("variant") = "ar_switch", py::arg("direction") = "i0",
      py::arg("control_limit") = 0.1, py::arg("start") = 75,
      py::arg("kernel") = "epanechnikov", py::arg("bandwidth") = 50.0, py::arg("lag") = "m4",
      py::arg("replications") = 1000, py::arg("seed") = 7, py::arg("threads") = 0,
      "Monte Carlo rejection rate / run length experiment");

  m.def("read_series", &read_series, py::arg("path"));
  m.def(
      "write_series",
      [](const std::string& path, const std::vector<double>& series) {
        write_series(path, series);
      },
      py::arg("path"), py::arg("series"));

  m.attr("__version__") = "0.1.0";
}
