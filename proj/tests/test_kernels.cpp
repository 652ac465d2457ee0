#include <cmath>

#include "doctest.h"
#include "seqmon/errors.hpp"
#include "seqmon/kernels.hpp"
#include "seqmon/rng.hpp"

using namespace seqmon;

TEST_CASE("built-in kernel values") {
  KernelSpec epa{Kernel::epanechnikov(), 2.0};
  CHECK(evaluate(epa, 0.0) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(evaluate(epa, 1.5) == 0.0);
  CHECK(evaluate(epa, 1.0) == 0.0);  // boundary belongs to the zero region

  KernelSpec gauss{Kernel::gaussian(), 4.0};
  CHECK(evaluate(gauss, 0.0) == doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-12));
}

TEST_CASE("scaled weights K_h = K(x/h)/h") {
  KernelSpec epa{Kernel::epanechnikov(), 2.0};
  CHECK(scaled_weight(epa, 0.0) == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(scaled_weight(epa, -2.0) == 0.0);

  KernelSpec gauss{Kernel::gaussian(), 4.0};
  const double phi1 = std::exp(-0.5) / std::sqrt(2.0 * M_PI);
  CHECK(scaled_weight(gauss, -4.0) == doctest::Approx(phi1 / 4.0).epsilon(1e-12));

  // exact scaling identity
  RngStream rng(1, 0);
  for (int i = 0; i < 100; ++i) {
    const double x = 6.0 * (rng.uniform() - 0.5);
    CHECK(scaled_weight(epa, x) == evaluate(epa, x / 2.0) / 2.0);
    CHECK(scaled_weight(gauss, x) == evaluate(gauss, x / 4.0) / 4.0);
  }
}

TEST_CASE("symmetry") {
  KernelSpec epa{Kernel::epanechnikov(), 1.0};
  KernelSpec gauss{Kernel::gaussian(), 1.0};
  RngStream rng(2, 0);
  for (int i = 0; i < 200; ++i) {
    const double z = 10.0 * (rng.uniform() - 0.5);
    CHECK(evaluate(epa, z) == evaluate(epa, -z));
    CHECK(evaluate(gauss, z) == evaluate(gauss, -z));
  }
}

namespace {

double trapezoid_mass(const Kernel& k, double lo, double hi, int grid) {
  double acc = 0.0;
  const double step = (hi - lo) / grid;
  for (int j = 0; j <= grid; ++j) {
    const double w = (j == 0 || j == grid) ? 0.5 : 1.0;
    acc += w * k(lo + j * step);
  }
  return acc * step;
}

}  // namespace

TEST_CASE("kernels integrate to one") {
  CHECK(trapezoid_mass(Kernel::epanechnikov(), -1.0, 1.0, 200000) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(trapezoid_mass(Kernel::gaussian(), -8.0, 8.0, 200000) ==
        doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("custom kernel registration validates the density") {
  // triangular kernel: valid
  auto tri = Kernel::custom("triangular", [](double z) {
    const double a = std::fabs(z);
    return a >= 1.0 ? 0.0 : 1.0 - a;
  }, 1.0);
  CHECK(tri(0.0) == doctest::Approx(1.0));
  CHECK(tri(2.0) == 0.0);

  // not normalized
  CHECK_THROWS_AS(Kernel::custom("double", [](double z) {
    const double a = std::fabs(z);
    return a >= 1.0 ? 0.0 : 2.0 * (1.0 - a);
  }, 1.0), ConfigError);

  // asymmetric
  CHECK_THROWS_AS(Kernel::custom("skewed", [](double z) {
    return z >= 0.0 && z <= 1.0 ? 1.0 : 0.0;
  }, 1.0), ConfigError);
}

TEST_CASE("kernel name round trip") {
  CHECK(Kernel::from_name("gaussian").name() == "gaussian");
  CHECK(Kernel::from_name("epanechnikov").name() == "epanechnikov");
  CHECK_THROWS_AS(Kernel::from_name("boxcar"), ConfigError);
  // the flat weight is a library-level fixture, not a config surface
  CHECK_THROWS_AS(Kernel::from_name("flat"), ConfigError);
  CHECK(Kernel::flat()(123.0) == 1.0);
}
