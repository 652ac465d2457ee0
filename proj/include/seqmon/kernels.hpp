#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace seqmon {

/// Weighting kernel shape K: a symmetric Lipschitz density with mean 0 and
/// finite variance. The two families used in the simulation study are built
/// in; arbitrary user densities can be registered through `custom`, which
/// runs a numerical normalization/symmetry check.
class Kernel {
 public:
  /// Standard normal density.
  static Kernel gaussian();

  /// 0.75 (1 - z^2) on [-1, 1].
  static Kernel epanechnikov();

  /// Constant weight 1. Not a density: this is the degenerate equal-weight
  /// scheme that recovers unweighted KPSS-type statistics when paired with
  /// bandwidth h = N. Skips registration checks by construction.
  static Kernel flat();

  /// Registers a user kernel supported on [-support, support] (use a large
  /// finite value for effectively unbounded kernels). Throws ConfigError if
  /// the function fails the symmetry/nonnegativity/normalization checks.
  static Kernel custom(std::string name, std::function<double(double)> fn,
                       double support);

  /// Parses "gaussian" | "epanechnikov" (the CLI/config surface).
  static Kernel from_name(const std::string& name);

  double operator()(double z) const;

  /// Half-width of the support; +inf for the Gaussian and flat kernels.
  double support() const { return support_; }
  bool bounded_support() const { return std::isfinite(support_); }
  const std::string& name() const { return name_; }

 private:
  enum class Family { gaussian, epanechnikov, flat, custom };
  Kernel(Family family, std::string name, double support)
      : family_(family), name_(std::move(name)), support_(support) {}

  Family family_;
  std::string name_;
  double support_;
  std::function<double(double)> fn_;
};

/// Kernel shape plus bandwidth h (in observation-index units).
struct KernelSpec {
  Kernel shape;
  double bandwidth;  // h > 0
};

/// K(z).
double evaluate(const KernelSpec& kernel, double z);

/// K_h(x) = K(x / h) / h.
double scaled_weight(const KernelSpec& kernel, double x);

}  // namespace seqmon
