#include "seqmon/limit_functionals.hpp"

#include <cmath>
#include <cstdio>

#include "seqmon/errors.hpp"
#include "seqmon/numeric.hpp"

namespace seqmon {

FunctionalKind functional_kind_from_name(const std::string& name) {
  if (name == "u1") return FunctionalKind::u1;
  if (name == "u2") return FunctionalKind::u2;
  if (name == "u2_tilde") return FunctionalKind::u2_tilde;
  if (name == "u2_tilde_n") return FunctionalKind::u2_tilde_n;
  if (name == "u2_mu") return FunctionalKind::u2_mu;
  if (name == "uz") return FunctionalKind::uz;
  if (name == "u01") return FunctionalKind::u01;
  if (name == "u10") return FunctionalKind::u10;
  throw ConfigError("unknown functional kind '" + name + "'");
}

std::string functional_kind_name(FunctionalKind kind) {
  switch (kind) {
    case FunctionalKind::u1: return "u1";
    case FunctionalKind::u2: return "u2";
    case FunctionalKind::u2_tilde: return "u2_tilde";
    case FunctionalKind::u2_tilde_n: return "u2_tilde_n";
    case FunctionalKind::u2_mu: return "u2_mu";
    case FunctionalKind::uz: return "uz";
    case FunctionalKind::u01: return "u01";
    case FunctionalKind::u10: return "u10";
  }
  return "?";
}

void LimitFunctionalSpec::validate() const {
  if (!(zeta >= 1.0)) throw ConfigError("functional: zeta must be >= 1");
  if (kind == FunctionalKind::u01 || kind == FunctionalKind::u10) {
    // theta = 1 is allowed as the degenerate no-change boundary: u10 then
    // coincides with u1 and u01 is identically zero.
    if (!(changepoint > 0.0 && changepoint <= 1.0)) {
      throw ConfigError("functional: changepoint theta must lie in (0,1]");
    }
  }
  if (kind == FunctionalKind::u2 && !(nuisance_ratio > 0.0)) {
    throw ConfigError("functional: nuisance ratio must be positive");
  }
  if (kind == FunctionalKind::u2_mu && !(mean_square > 0.0)) {
    throw ConfigError("functional: E Y_1^2 must be positive");
  }
}

namespace {

std::string fmt_param(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::string LimitFunctionalSpec::cache_kind() const {
  std::string base = functional_kind_name(kind);
  switch (kind) {
    case FunctionalKind::u2:
      if (nuisance_ratio != 1.0) base += "(ratio=" + fmt_param(nuisance_ratio) + ")";
      break;
    case FunctionalKind::uz:
      base += "(a=" + fmt_param(ou_coefficient) + ")";
      break;
    case FunctionalKind::u01:
    case FunctionalKind::u10:
      base += "(theta=" + fmt_param(changepoint) + ")";
      break;
    case FunctionalKind::u2_mu: {
      std::string mu = drift ? drift_label : "0";
      if (drift && drift_label.empty()) {
        throw ConfigError("u2_mu with a custom drift needs drift_label for caching");
      }
      base += "(mu=" + mu + ",sigma=" + fmt_param(sigma) + ",ey2=" + fmt_param(mean_square) + ")";
      break;
    }
    default:
      break;
  }
  switch (transform) {
    case PathTransform::none: break;
    case PathTransform::demeaned: base += "_demeaned"; break;
    case PathTransform::detrended: base += "_detrended"; break;
  }
  return base;
}

namespace {

/// Linear interpolation of path values at an off-grid point.
double path_at(const SamplePath& path, double s) {
  const std::size_t grid = path.grid();
  const double pos = s * static_cast<double>(grid);
  if (pos <= 0.0) return path.values.front();
  if (pos >= static_cast<double>(grid)) return path.values.back();
  const auto lo = static_cast<std::size_t>(pos);
  const double frac = pos - static_cast<double>(lo);
  return path.values[lo] + frac * (path.values[lo + 1] - path.values[lo]);
}

/// Quadrature state shared across evaluation points of one path.
struct Evaluator {
  const LimitFunctionalSpec& spec;
  const SamplePath& path;
  std::size_t grid;
  double step;
  std::vector<double> numerator_integrand;  // g(r_j)
  std::vector<double> denominator;          // D(s_j); empty -> constant denominator
  double constant_denominator = 1.0;
  double ratio_scale = 1.0;  // multiplies zeta/s * integral / denominator
  std::vector<double> kernel_values;        // K(zeta d step), d = 0..d_max

  Evaluator(const LimitFunctionalSpec& s, const SamplePath& p) : spec(s), path(p) {
    spec.validate();
    if (spec.kind == FunctionalKind::uz) {
      if (path.tag != PathTag::ou) throw WrongTag("uz functional needs an OU path");
    } else if (path.tag == PathTag::ou) {
      throw WrongTag("Brownian-driven functional got an OU path");
    }
    grid = path.grid();
    step = path.step();
    precompute_kernel();
    precompute_integrands();
  }

  void precompute_kernel() {
    std::size_t d_max = grid;
    if (spec.kernel.bounded_support()) {
      const double reach = spec.kernel.support() / (spec.zeta * step);
      d_max = std::min<std::size_t>(grid, static_cast<std::size_t>(std::floor(reach)) + 1);
    }
    kernel_values.resize(d_max + 1);
    for (std::size_t d = 0; d <= d_max; ++d) {
      // K is symmetric; evaluate at the absolute offset.
      kernel_values[d] = spec.kernel(spec.zeta * static_cast<double>(d) * step);
    }
  }

  void precompute_integrands() {
    const auto& v = path.values;
    switch (spec.kind) {
      case FunctionalKind::u1:
      case FunctionalKind::uz: {
        auto integrated = cumulative_trapezoid(v, step);
        numerator_integrand.resize(grid + 1);
        for (std::size_t j = 0; j <= grid; ++j) {
          numerator_integrand[j] = integrated[j] * integrated[j];
        }
        std::vector<double> squared(grid + 1);
        for (std::size_t j = 0; j <= grid; ++j) squared[j] = v[j] * v[j];
        denominator = cumulative_trapezoid(squared, step);
        break;
      }
      case FunctionalKind::u2:
      case FunctionalKind::u2_tilde:
      case FunctionalKind::u2_tilde_n: {
        numerator_integrand.resize(grid + 1);
        for (std::size_t j = 0; j <= grid; ++j) numerator_integrand[j] = v[j] * v[j];
        ratio_scale = spec.kind == FunctionalKind::u2 ? spec.nuisance_ratio : 1.0;
        break;
      }
      case FunctionalKind::u2_mu: {
        numerator_integrand.resize(grid + 1);
        for (std::size_t j = 0; j <= grid; ++j) {
          const double s = static_cast<double>(j) * step;
          const double mu = spec.drift ? spec.drift(s) : 0.0;
          const double x = mu + spec.sigma * v[j];
          numerator_integrand[j] = x * x;
        }
        constant_denominator = spec.mean_square;
        break;
      }
      case FunctionalKind::u01: {
        precompute_u01();
        break;
      }
      case FunctionalKind::u10: {
        precompute_u10();
        break;
      }
    }
  }

  // First grid index at or after theta, plus the partial-cell contribution of
  // [theta, j_theta*step] for an integrand f with linear interpolation at theta.
  struct ThetaCell {
    std::size_t first_index;
    double span;  // first_index*step - theta
  };

  ThetaCell theta_cell() const {
    const double theta = spec.changepoint;
    auto first = static_cast<std::size_t>(std::ceil(theta / step - 1e-9));
    if (first > grid) first = grid;
    return {first, static_cast<double>(first) * step - theta};
  }

  void precompute_u01() {
    const auto& v = path.values;
    const double theta = spec.changepoint;
    const auto cell = theta_cell();
    const double b_theta = path_at(path, theta);

    // int_theta^{r_j} B, zero before theta (indicator structure).
    std::vector<double> from_theta(grid + 1, 0.0);
    for (std::size_t j = cell.first_index; j <= grid; ++j) {
      if (j == cell.first_index) {
        from_theta[j] = 0.5 * cell.span * (b_theta + v[j]);
      } else {
        from_theta[j] = from_theta[j - 1] + 0.5 * step * (v[j - 1] + v[j]);
      }
    }
    numerator_integrand.assign(grid + 1, 0.0);
    for (std::size_t j = cell.first_index; j <= grid; ++j) {
      numerator_integrand[j] = from_theta[j] * from_theta[j];
    }
    // Denominator: int_theta^s (B(t) + B(theta))^2 dt.
    denominator.assign(grid + 1, 0.0);
    auto shifted_sq = [&](double b) {
      const double x = b + b_theta;
      return x * x;
    };
    for (std::size_t j = cell.first_index; j <= grid; ++j) {
      if (j == cell.first_index) {
        denominator[j] = 0.5 * cell.span * (shifted_sq(b_theta) + shifted_sq(v[j]));
      } else {
        denominator[j] = denominator[j - 1] + 0.5 * step * (shifted_sq(v[j - 1]) + shifted_sq(v[j]));
      }
    }
  }

  void precompute_u10() {
    const auto& v = path.values;
    const double theta = spec.changepoint;
    auto integrated = cumulative_trapezoid(v, step);
    std::vector<double> squared(grid + 1);
    for (std::size_t j = 0; j <= grid; ++j) squared[j] = v[j] * v[j];
    auto squared_int = cumulative_trapezoid(squared, step);

    const double pos = theta / step;
    auto full = static_cast<std::size_t>(std::floor(pos + 1e-9));
    if (full > grid) full = grid;
    const double span = theta - static_cast<double>(full) * step;
    const double b_theta = path_at(path, theta);
    double int_to_theta = integrated[full];
    double sq_to_theta = squared_int[full];
    if (span > 0.0 && full < grid) {
      int_to_theta += 0.5 * span * (v[full] + b_theta);
      sq_to_theta += 0.5 * span * (v[full] * v[full] + b_theta * b_theta);
    }

    numerator_integrand.resize(grid + 1);
    denominator.resize(grid + 1);
    for (std::size_t j = 0; j <= grid; ++j) {
      const double capped_int = static_cast<double>(j) * step <= theta ? integrated[j] : int_to_theta;
      numerator_integrand[j] = capped_int * capped_int;
      denominator[j] = static_cast<double>(j) * step <= theta ? squared_int[j] : sq_to_theta;
    }
  }

  double value_at(std::size_t js) const {
    if (js == 0 || js > grid) throw ConfigError("functional evaluation point out of (0,1]");
    const double s = static_cast<double>(js) * step;
    // Defined as 0 up to the change-point; the value at theta itself is the
    // right-continuous limit 0 of the 0/0 boundary.
    if (spec.kind == FunctionalKind::u01 && s <= spec.changepoint) return 0.0;

    const std::size_t d_max = kernel_values.size() - 1;
    const std::size_t j_lo = js > d_max ? js - d_max : 0;
    KahanSum acc;
    for (std::size_t j = j_lo; j <= js; ++j) {
      const double w = (j == 0 || j == js) ? 0.5 : 1.0;
      acc.add(w * kernel_values[js - j] * numerator_integrand[j]);
    }
    const double weighted = acc.value() * step;

    double den = constant_denominator;
    if (!denominator.empty()) den = denominator[js];
    if (spec.kind == FunctionalKind::u01 && !(den > 0.0)) return 0.0;
    if (!(den > 0.0)) {
      throw DegenerateDenominator("limit functional: denominator integral vanished at s=" +
                                  std::to_string(s));
    }
    const double s_power =
        spec.kind == FunctionalKind::u2_tilde_n ? 1.0 : 1.0 / s;
    return ratio_scale * spec.zeta * s_power * weighted / den;
  }
};

}  // namespace

double eval_functional(const LimitFunctionalSpec& spec, const SamplePath& path, double s) {
  if (!(s > 0.0 && s <= 1.0)) throw ConfigError("functional: s must lie in (0,1]");
  Evaluator ev(spec, path);
  const auto js =
      static_cast<std::size_t>(std::llround(s * static_cast<double>(path.grid())));
  return ev.value_at(std::max<std::size_t>(1, js));
}

std::vector<double> eval_functional_on_grid(const LimitFunctionalSpec& spec,
                                            const SamplePath& path, double kappa) {
  if (!(kappa > 0.0 && kappa < 1.0)) throw ConfigError("functional: kappa must lie in (0,1)");
  Evaluator ev(spec, path);
  const std::size_t grid = path.grid();
  auto j0 = static_cast<std::size_t>(
      std::ceil(kappa * static_cast<double>(grid) - 1e-9));
  if (j0 == 0) j0 = 1;
  std::vector<double> out;
  out.reserve(grid - j0 + 1);
  for (std::size_t js = j0; js <= grid; ++js) out.push_back(ev.value_at(js));
  return out;
}

}  // namespace seqmon
