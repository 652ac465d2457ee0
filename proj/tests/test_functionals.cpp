#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "seqmon/errors.hpp"
#include "seqmon/limit_functionals.hpp"

using namespace seqmon;

namespace {

SamplePath fixture_path(std::size_t grid, std::uint64_t stream) {
  RngStream rng(404, stream);
  return simulate_bm(grid, rng);
}

LimitFunctionalSpec spec_of(FunctionalKind kind, double zeta) {
  LimitFunctionalSpec spec;
  spec.kind = kind;
  spec.zeta = zeta;
  spec.kernel = Kernel::epanechnikov();
  return spec;
}

}  // namespace

TEST_CASE("u1 matches the double-loop quadrature oracle") {
  // stored fixture: a short deterministic grid
  SamplePath fixed{PathTag::bm, 0.0,
                   {0.0,  0.12, 0.31, 0.18, -0.05, -0.22, 0.02, 0.35, 0.61, 0.44,
                    0.52, 0.70, 0.66, 0.81, 0.95,  0.88,  1.02, 1.10, 0.97, 1.05, 1.12}};
  auto spec = spec_of(FunctionalKind::u1, 2.5);
  for (std::size_t js : {5u, 10u, 20u}) {
    const double s = static_cast<double>(js) / 20.0;
    CHECK(eval_functional(spec, fixed, s) ==
          doctest::Approx(oracle::u1_functional(fixed.values, js, 2.5, "epanechnikov"))
              .epsilon(1e-10));
  }

  auto random_path = fixture_path(400, 1);
  for (double zeta : {1.0, 5.0, 12.0}) {
    auto sp = spec_of(FunctionalKind::u1, zeta);
    for (std::size_t js : {120u, 257u, 400u}) {
      const double s = static_cast<double>(js) / 400.0;
      CHECK(eval_functional(sp, random_path, s) ==
            doctest::Approx(oracle::u1_functional(random_path.values, js, zeta, "epanechnikov"))
                .epsilon(1e-10));
    }
  }

  // gaussian kernel variant exercises the unbounded-support path
  auto gspec = spec_of(FunctionalKind::u1, 5.0);
  gspec.kernel = Kernel::gaussian();
  CHECK(eval_functional(gspec, random_path, 0.75) ==
        doctest::Approx(oracle::u1_functional(random_path.values, 300, 5.0, "gaussian"))
            .epsilon(1e-10));
}

TEST_CASE("u2 family matches the oracle and its reductions") {
  auto path = fixture_path(300, 2);
  auto u2 = spec_of(FunctionalKind::u2, 5.0);
  u2.nuisance_ratio = 1.7;
  for (std::size_t js : {90u, 200u, 300u}) {
    const double s = static_cast<double>(js) / 300.0;
    CHECK(eval_functional(u2, path, s) ==
          doctest::Approx(oracle::u2_functional(path.values, js, 5.0, "epanechnikov", 1.7))
              .epsilon(1e-10));
  }

  // the normalized-statistic law is the unit-ratio special case
  auto tilde = spec_of(FunctionalKind::u2_tilde, 5.0);
  auto unit = spec_of(FunctionalKind::u2, 5.0);
  unit.nuisance_ratio = 1.0;
  CHECK(eval_functional(tilde, path, 0.5) == eval_functional(unit, path, 0.5));

  // the statistic-matched law drops the 1/s prefactor
  auto matched = spec_of(FunctionalKind::u2_tilde_n, 5.0);
  for (double s : {0.4, 0.75, 1.0}) {
    CHECK(eval_functional(matched, path, s) ==
          doctest::Approx(s * eval_functional(tilde, path, s)).epsilon(1e-12));
  }
  CHECK(eval_functional(matched, path, 1.0) ==
        doctest::Approx(eval_functional(tilde, path, 1.0)).epsilon(1e-12));

  // drift == 0 with sigma = 1 and unit mean square reduces to u2
  auto mu0 = spec_of(FunctionalKind::u2_mu, 5.0);
  CHECK(eval_functional(mu0, path, 0.5) == eval_functional(unit, path, 0.5));

  // a nonzero drift shifts the law upward
  auto bumped = spec_of(FunctionalKind::u2_mu, 5.0);
  bumped.drift = [](double s) { return 2.0 * s; };
  bumped.drift_label = "ramp2";
  CHECK(eval_functional(bumped, path, 0.5) > eval_functional(mu0, path, 0.5));
}

TEST_CASE("u1 is invariant under path scaling") {
  auto path = fixture_path(250, 3);
  SamplePath scaled = path;
  for (auto& v : scaled.values) v *= 2.5;
  auto spec = spec_of(FunctionalKind::u1, 5.0);
  for (double s : {0.3, 0.62, 1.0}) {
    CHECK(eval_functional(spec, path, s) ==
          doctest::Approx(eval_functional(spec, scaled, s)).epsilon(1e-10));
  }
}

TEST_CASE("uz matches the oracle on an ou path") {
  RngStream rng(405, 9);
  auto path = simulate_ou(-8.0, 300, rng);
  auto spec = spec_of(FunctionalKind::uz, 4.0);
  spec.ou_coefficient = -8.0;
  // same ratio structure as u1, driven by the OU path
  for (std::size_t js : {100u, 300u}) {
    const double s = static_cast<double>(js) / 300.0;
    CHECK(eval_functional(spec, path, s) ==
          doctest::Approx(oracle::u1_functional(path.values, js, 4.0, "epanechnikov"))
              .epsilon(1e-10));
  }
  // tag checks both ways
  auto bm = fixture_path(300, 4);
  CHECK_THROWS_AS(eval_functional(spec, bm, 0.5), WrongTag);
  auto u1spec = spec_of(FunctionalKind::u1, 4.0);
  CHECK_THROWS_AS(eval_functional(u1spec, path, 0.5), WrongTag);
}

TEST_CASE("u10 reduces to u1 when theta covers the whole interval") {
  auto path = fixture_path(320, 5);
  auto u10 = spec_of(FunctionalKind::u10, 5.0);
  u10.changepoint = 1.0;
  auto u1 = spec_of(FunctionalKind::u1, 5.0);
  for (double s : {0.25, 0.5, 0.8, 1.0}) {
    CHECK(eval_functional(u10, path, s) == eval_functional(u1, path, s));
  }
}

TEST_CASE("u10 matches the oracle for interior change points") {
  auto path = fixture_path(200, 6);
  for (double theta : {0.35, 0.5, 0.713}) {
    auto spec = spec_of(FunctionalKind::u10, 5.0);
    spec.changepoint = theta;
    for (std::size_t js : {80u, 140u, 200u}) {
      const double s = static_cast<double>(js) / 200.0;
      CHECK(eval_functional(spec, path, s) ==
            doctest::Approx(
                oracle::u10_functional(path.values, js, 5.0, "epanechnikov", theta))
                .epsilon(1e-10));
    }
  }
}

TEST_CASE("u01 is zero before the change and matches the oracle after") {
  auto path = fixture_path(200, 7);
  for (double theta : {0.3, 0.5, 0.617}) {
    auto spec = spec_of(FunctionalKind::u01, 5.0);
    spec.changepoint = theta;
    CHECK(eval_functional(spec, path, theta * 0.5) == 0.0);
    for (std::size_t js : {130u, 170u, 200u}) {
      const double s = static_cast<double>(js) / 200.0;
      if (s <= theta) continue;
      CHECK(eval_functional(spec, path, s) ==
            doctest::Approx(
                oracle::u01_functional(path.values, js, 5.0, "epanechnikov", theta))
                .epsilon(1e-10));
    }
  }
  // at the boundary itself the value is pinned to 0 by right-continuity
  auto spec = spec_of(FunctionalKind::u01, 5.0);
  spec.changepoint = 0.5;
  CHECK(eval_functional(spec, path, 0.5) == 0.0);
}

TEST_CASE("grid evaluation agrees with pointwise evaluation") {
  auto path = fixture_path(250, 8);
  auto spec = spec_of(FunctionalKind::u2_tilde, 5.0);
  auto values = eval_functional_on_grid(spec, path, 0.3);
  CHECK(values.size() == 250 - 75 + 1);
  for (std::size_t i = 0; i < values.size(); i += 37) {
    const double s = static_cast<double>(75 + i) / 250.0;
    CHECK(values[i] == eval_functional(spec, path, s));
  }
}

TEST_CASE("kind names round trip") {
  for (auto kind : {FunctionalKind::u1, FunctionalKind::u2, FunctionalKind::u2_tilde,
                    FunctionalKind::u2_tilde_n, FunctionalKind::u2_mu, FunctionalKind::uz,
                    FunctionalKind::u01, FunctionalKind::u10}) {
    CHECK(functional_kind_from_name(functional_kind_name(kind)) == kind);
  }
  CHECK_THROWS_AS(functional_kind_from_name("u99"), ConfigError);

  auto spec = spec_of(FunctionalKind::uz, 5.0);
  spec.ou_coefficient = -15.0;
  CHECK(spec.cache_kind() == "uz(a=-15)");
  auto cp = spec_of(FunctionalKind::u01, 5.0);
  cp.changepoint = 0.5;
  CHECK(cp.cache_kind() == "u01(theta=0.5)");
  auto plain = spec_of(FunctionalKind::u1, 5.0);
  CHECK(plain.cache_kind() == "u1");
  plain.transform = PathTransform::demeaned;
  CHECK(plain.cache_kind() == "u1_demeaned");
}
