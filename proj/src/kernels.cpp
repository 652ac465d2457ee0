#include "seqmon/kernels.hpp"

#include <cmath>

#include "seqmon/errors.hpp"

namespace seqmon {
namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779;

double check_normalization(const std::function<double(double)>& fn, double support) {
  // Trapezoid over [-support, support]; enough resolution for any kernel
  // smooth at the scale of its support.
  const int grid = 20000;
  const double step = 2.0 * support / grid;
  double acc = 0.0;
  for (int j = 0; j <= grid; ++j) {
    const double z = -support + j * step;
    const double w = (j == 0 || j == grid) ? 0.5 : 1.0;
    acc += w * fn(z);
  }
  return acc * step;
}

}  // namespace

Kernel Kernel::gaussian() {
  return Kernel(Family::gaussian, "gaussian", std::numeric_limits<double>::infinity());
}

Kernel Kernel::epanechnikov() {
  return Kernel(Family::epanechnikov, "epanechnikov", 1.0);
}

Kernel Kernel::flat() {
  return Kernel(Family::flat, "flat", std::numeric_limits<double>::infinity());
}

Kernel Kernel::custom(std::string name, std::function<double(double)> fn, double support) {
  if (!fn) throw ConfigError("custom kernel: empty function");
  if (!(support > 0.0) || !std::isfinite(support)) {
    throw ConfigError("custom kernel: support half-width must be positive and finite");
  }
  const int probes = 257;
  for (int j = 0; j < probes; ++j) {
    const double z = support * (static_cast<double>(j) / (probes - 1));
    const double kp = fn(z);
    const double km = fn(-z);
    if (!(kp >= 0.0) || !(km >= 0.0)) {
      throw ConfigError("custom kernel '" + name + "': negative value at z=" + std::to_string(z));
    }
    if (std::fabs(kp - km) > 1e-9 * (1.0 + std::fabs(kp))) {
      throw ConfigError("custom kernel '" + name + "': not symmetric at z=" + std::to_string(z));
    }
  }
  const double mass = check_normalization(fn, support);
  if (std::fabs(mass - 1.0) > 1e-6) {
    throw ConfigError("custom kernel '" + name + "': integrates to " + std::to_string(mass) +
                      ", expected 1");
  }
  Kernel k(Family::custom, std::move(name), support);
  k.fn_ = std::move(fn);
  return k;
}

Kernel Kernel::from_name(const std::string& name) {
  if (name == "gaussian") return gaussian();
  if (name == "epanechnikov") return epanechnikov();
  throw ConfigError("unknown kernel '" + name + "' (expected gaussian or epanechnikov)");
}

double Kernel::operator()(double z) const {
  switch (family_) {
    case Family::gaussian:
      return kInvSqrt2Pi * std::exp(-0.5 * z * z);
    case Family::epanechnikov: {
      const double zz = z * z;
      return zz >= 1.0 ? 0.0 : 0.75 * (1.0 - zz);
    }
    case Family::flat:
      return 1.0;
    case Family::custom:
      return std::fabs(z) > support_ ? 0.0 : fn_(z);
  }
  return 0.0;
}

double evaluate(const KernelSpec& kernel, double z) { return kernel.shape(z); }

double scaled_weight(const KernelSpec& kernel, double x) {
  if (!(kernel.bandwidth > 0.0)) throw ConfigError("kernel bandwidth must be positive");
  return kernel.shape(x / kernel.bandwidth) / kernel.bandwidth;
}

}  // namespace seqmon
