#include "seqmon/dgp.hpp"

#include <cmath>

#include "seqmon/errors.hpp"

namespace seqmon {
namespace {

double draw(RngStream& rng, const InnovationFn& innovation) {
  return innovation ? innovation(rng) : rng.normal();
}

std::size_t change_index(double theta, std::size_t n) {
  if (!(theta > 0.0 && theta < 1.0)) throw ConfigError("change-point theta must lie in (0,1)");
  return static_cast<std::size_t>(std::floor(theta * static_cast<double>(n)));
}

}  // namespace

std::vector<double> gen_arma11(double phi, double beta, std::size_t n, RngStream& rng,
                               const InnovationFn& innovation) {
  if (n < 1) throw ConfigError("gen_arma11: N must be >= 1");
  std::vector<double> out(n);
  double e_prev = draw(rng, innovation);  // e_0
  double y = 0.0;                         // Y_0
  for (std::size_t i = 0; i < n; ++i) {
    const double e = draw(rng, innovation);
    y = phi * y + e - beta * e_prev;
    e_prev = e;
    out[i] = y;
  }
  return out;
}

std::vector<double> gen_cp_i1_to_i0(double theta, double phi_post, double eta, std::size_t n,
                                    RngStream& rng, ChangeVariant variant,
                                    const InnovationFn& innovation) {
  if (!(std::fabs(phi_post) < 1.0)) throw ConfigError("|phi_post| must be < 1");
  const std::size_t cp = change_index(theta, n);
  std::vector<double> out(n);
  if (variant == ChangeVariant::ar_switch) {
    double y = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      const double phi_n = i < cp ? 1.0 : phi_post;
      y = phi_n * y + draw(rng, innovation);
      out[i - 1] = y;
    }
  } else {
    if (!(eta > 0.0)) throw ConfigError("eta must be positive");
    double partial = draw(rng, innovation);  // u_0 enters the pre-change sums
    for (std::size_t i = 1; i <= n; ++i) {
      const double u = draw(rng, innovation);
      if (i < cp) {
        partial += u;
        out[i - 1] = partial;
      } else {
        out[i - 1] = eta * u;
      }
    }
  }
  return out;
}

std::vector<double> gen_cp_i0_to_i1(double theta, double phi_pre, std::size_t n,
                                    RngStream& rng, ChangeVariant variant,
                                    const InnovationFn& innovation) {
  if (!(std::fabs(phi_pre) < 1.0)) throw ConfigError("|phi_pre| must be < 1");
  const std::size_t cp = change_index(theta, n);
  std::vector<double> out(n);
  if (variant == ChangeVariant::ar_switch) {
    double y = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      const double phi_n = i < cp ? phi_pre : 1.0;
      y = phi_n * y + draw(rng, innovation);
      out[i - 1] = y;
    }
  } else {
    double y = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      const double u = draw(rng, innovation);
      y = i < cp ? u : y + u;
      out[i - 1] = y;
    }
  }
  return out;
}

std::vector<double> gen_local_to_unity(double a, std::size_t n, RngStream& rng,
                                       const InnovationFn& innovation) {
  if (n < 1) throw ConfigError("gen_local_to_unity: N must be >= 1");
  const double bound = static_cast<double>(n) / 2.0;
  if (!(a >= -bound && a <= bound)) {
    throw ParameterOutOfRange("local-to-unity coefficient a must lie in [-N/2, N/2]");
  }
  const double coef = 1.0 + a / static_cast<double>(n);
  std::vector<double> out(n);
  double y = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    y = coef * y + draw(rng, innovation);
    out[i - 1] = y;
  }
  return out;
}

std::vector<double> gen_local_trend(const std::function<double(double)>& m0, double theta,
                                    std::size_t n, RngStream& rng,
                                    const InnovationFn& innovation) {
  const std::size_t cp = change_index(theta, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<double> out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const double x = (static_cast<double>(i) - static_cast<double>(cp)) /
                     static_cast<double>(n);
    const double level = m0 ? m0(x) : 0.0;
    if (level < 0.0) throw ConfigError("trend function m0 must be non-negative");
    out[i - 1] = level * scale + draw(rng, innovation);
  }
  return out;
}

std::function<double(double)> truncated_linear_trend(double slope) {
  if (!(slope >= 0.0)) throw ConfigError("trend slope must be non-negative");
  return [slope](double x) { return (x >= 0.0 && x <= 1.0) ? slope * x : 0.0; };
}

void DgpSpec::validate() const {
  if (length < 10) throw ConfigError("dgp: length N must be >= 10");
  switch (kind) {
    case Kind::arma11:
      break;
    case Kind::cp_i1_to_i0:
      if (!(std::fabs(phi_post) < 1.0)) throw ConfigError("dgp: |phi_post| must be < 1");
      if (!(theta > 0.0 && theta < 1.0)) throw ConfigError("dgp: theta must lie in (0,1)");
      break;
    case Kind::cp_i0_to_i1:
      if (!(std::fabs(phi_pre) < 1.0)) throw ConfigError("dgp: |phi_pre| must be < 1");
      if (!(theta > 0.0 && theta < 1.0)) throw ConfigError("dgp: theta must lie in (0,1)");
      break;
    case Kind::local_to_unity:
      break;
    case Kind::local_trend:
      if (!(theta > 0.0 && theta < 1.0)) throw ConfigError("dgp: theta must lie in (0,1)");
      break;
  }
}

std::size_t DgpSpec::changepoint_index() const { return change_index(theta, length); }

DgpSpec::Kind DgpSpec::kind_from_name(const std::string& name) {
  if (name == "arma11") return Kind::arma11;
  if (name == "cp_i1_to_i0") return Kind::cp_i1_to_i0;
  if (name == "cp_i0_to_i1") return Kind::cp_i0_to_i1;
  if (name == "local_to_unity") return Kind::local_to_unity;
  if (name == "local_trend") return Kind::local_trend;
  throw ConfigError("unknown dgp kind '" + name + "'");
}

std::string DgpSpec::kind_name(Kind kind) {
  switch (kind) {
    case Kind::arma11: return "arma11";
    case Kind::cp_i1_to_i0: return "cp_i1_to_i0";
    case Kind::cp_i0_to_i1: return "cp_i0_to_i1";
    case Kind::local_to_unity: return "local_to_unity";
    case Kind::local_trend: return "local_trend";
  }
  return "?";
}

std::string DgpSpec::describe() const {
  switch (kind) {
    case Kind::arma11:
      return "arma11(phi=" + std::to_string(phi) + ",beta=" + std::to_string(beta) + ")";
    case Kind::cp_i1_to_i0:
      return "cp_i1_to_i0(theta=" + std::to_string(theta) +
             ",phi_post=" + std::to_string(phi_post) +
             (variant == ChangeVariant::partial_sum ? ",eta=" + std::to_string(eta) : "") +
             "," + (variant == ChangeVariant::ar_switch ? "ar_switch" : "partial_sum") + ")";
    case Kind::cp_i0_to_i1:
      return "cp_i0_to_i1(theta=" + std::to_string(theta) +
             ",phi_pre=" + std::to_string(phi_pre) + "," +
             (variant == ChangeVariant::ar_switch ? "ar_switch" : "partial_sum") + ")";
    case Kind::local_to_unity:
      return "local_to_unity(a=" + std::to_string(a) + ")";
    case Kind::local_trend:
      return "local_trend(slope=" + std::to_string(slope) + ",theta=" + std::to_string(theta) + ")";
  }
  return "?";
}

std::vector<double> generate(const DgpSpec& spec, RngStream& rng, const InnovationFn& innovation) {
  spec.validate();
  switch (spec.kind) {
    case DgpSpec::Kind::arma11:
      return gen_arma11(spec.phi, spec.beta, spec.length, rng, innovation);
    case DgpSpec::Kind::cp_i1_to_i0:
      return gen_cp_i1_to_i0(spec.theta, spec.phi_post, spec.eta, spec.length, rng,
                             spec.variant, innovation);
    case DgpSpec::Kind::cp_i0_to_i1:
      return gen_cp_i0_to_i1(spec.theta, spec.phi_pre, spec.length, rng, spec.variant,
                             innovation);
    case DgpSpec::Kind::local_to_unity:
      return gen_local_to_unity(spec.a, spec.length, rng, innovation);
    case DgpSpec::Kind::local_trend:
      return gen_local_trend(truncated_linear_trend(spec.slope), spec.theta, spec.length,
                             rng, innovation);
  }
  throw ConfigError("unreachable dgp kind");
}

}  // namespace seqmon
