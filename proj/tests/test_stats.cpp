#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "seqmon/errors.hpp"
#include "seqmon/numeric.hpp"
#include "seqmon/rng.hpp"
#include "seqmon/stats.hpp"

using namespace seqmon;

namespace {

std::vector<double> random_series(std::size_t n, std::uint64_t stream, double scale = 1.0) {
  RngStream rng(2024, stream);
  std::vector<double> out(n);
  for (auto& y : out) y = scale * rng.normal();
  return out;
}

}  // namespace

TEST_CASE("u_stat hand-checked value") {
  // Y = (1,1,1), n = 3, Epanechnikov h = 2:
  // numerator 3^-3 [0 + 4*0.28125 + 9*0.375] = 4.5/27, denominator 3^-2*3.
  auto w = TimeSeriesWindow::from_series(std::vector<double>{1.0, 1.0, 1.0});
  KernelSpec epa{Kernel::epanechnikov(), 2.0};
  CHECK(u_stat(w, 3, epa) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(u_stat(w, 3, epa) ==
        doctest::Approx(oracle::u_stat({1.0, 1.0, 1.0}, 3, "epanechnikov", 2.0)).epsilon(1e-13));
}

TEST_CASE("u_stat equals the brute-force oracle") {
  const std::vector<double> y{0.1, -0.2, 0.3, 0.05, -0.15};
  auto w = TimeSeriesWindow::from_series(y);
  KernelSpec gauss{Kernel::gaussian(), 2.0};
  CHECK(u_stat(w, 5, gauss) ==
        doctest::Approx(oracle::u_stat(y, 5, "gaussian", 2.0)).epsilon(1e-12));

  auto z = random_series(80, 11);
  auto wz = TimeSeriesWindow::from_series(z);
  KernelSpec epa{Kernel::epanechnikov(), 15.0};
  for (std::size_t n : {1u, 7u, 40u, 80u}) {
    CHECK(u_stat(wz, n, epa) ==
          doctest::Approx(oracle::u_stat(z, n, "epanechnikov", 15.0)).epsilon(1e-12));
    CHECK(u_stat(wz, n, gauss) ==
          doctest::Approx(oracle::u_stat(z, n, "gaussian", 2.0)).epsilon(1e-12));
  }
}

TEST_CASE("u_stat scale invariance and degenerate cases") {
  auto y = random_series(60, 3);
  auto w = TimeSeriesWindow::from_series(y);
  std::vector<double> scaled(y);
  for (auto& v : scaled) v *= -3.7;
  auto ws = TimeSeriesWindow::from_series(scaled);
  KernelSpec epa{Kernel::epanechnikov(), 10.0};
  for (std::size_t n : {2u, 17u, 60u}) {
    CHECK(u_stat(w, n, epa) == doctest::Approx(u_stat(ws, n, epa)).epsilon(1e-12));
  }

  CHECK(u_stat(w, 0, epa) == 0.0);  // s < 1/N region, defined as 0

  auto zeros = TimeSeriesWindow::from_series(std::vector<double>{0.0, 0.0, 0.0});
  CHECK_THROWS_AS(u_stat(zeros, 3, epa), DegenerateDenominator);
}

TEST_CASE("u_stat does not depend on the horizon") {
  auto y = random_series(50, 4);
  auto w1 = TimeSeriesWindow::from_series(y, 50);
  auto w2 = TimeSeriesWindow::from_series(y, 5000);
  KernelSpec epa{Kernel::epanechnikov(), 12.0};
  for (std::size_t n : {3u, 25u, 50u}) {
    CHECK(u_stat(w1, n, epa) == u_stat(w2, n, epa));
  }
}

TEST_CASE("newey_west hand-checked values") {
  auto w = TimeSeriesWindow::from_series(std::vector<double>{1.0, 1.0, 1.0, 1.0});
  CHECK(newey_west(w, 4, 0, 4) == doctest::Approx(1.0).epsilon(1e-12));
  // m=2: 1 + 2*[(1-1/2)*(3/4)] + 2*[(1-2/2)*(2/4)] = 1.75
  CHECK(newey_west(w, 4, 2, 4) == doctest::Approx(1.75).epsilon(1e-12));

  // m=1: the only Bartlett weight is zero, variance term remains
  auto y = random_series(30, 8);
  auto wy = TimeSeriesWindow::from_series(y);
  CHECK(newey_west(wy, 30, 1, 30) == newey_west(wy, 30, 0, 30));

  CHECK_THROWS_AS(newey_west(wy, 5, 5, 30), InvalidLag);
}

TEST_CASE("newey_west equals the oracle and stays nonnegative") {
  auto y = random_series(120, 9);
  auto w = TimeSeriesWindow::from_series(y);
  for (std::size_t n : {10u, 64u, 120u}) {
    for (std::size_t m : {0u, 1u, 3u, 9u}) {
      CHECK(newey_west(w, n, m, 120) ==
            doctest::Approx(oracle::newey_west(y, n, m, 120)).epsilon(1e-12));
    }
  }
  // Bartlett nonnegativity on adversarial alternating and random inputs
  RngStream rng(5, 0);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<double> series(40);
    for (std::size_t i = 0; i < series.size(); ++i) {
      series[i] = (i % 2 == 0 ? 1.0 : -1.0) * (0.5 + rng.uniform());
    }
    auto ws = TimeSeriesWindow::from_series(series);
    for (std::size_t m = 0; m < 39; ++m) {
      CHECK(newey_west(ws, 40, m, 40) >= 0.0);
    }
  }
}

TEST_CASE("u_tilde_stat hand-checked value and oracle") {
  auto w = TimeSeriesWindow::from_series(std::vector<double>{1.0, 1.0, 1.0});
  KernelSpec epa{Kernel::epanechnikov(), 2.0};
  CHECK(u_tilde_stat(w, 3, 3, epa, LagRule::fixed(0)) == doctest::Approx(1.5).epsilon(1e-12));

  auto y = random_series(90, 21);
  auto wy = TimeSeriesWindow::from_series(y);
  for (std::size_t n : {5u, 33u, 90u}) {
    const std::size_t m = resolve_lag(LagRule::m4(), n);
    CHECK(u_tilde_stat(wy, n, 90, epa, LagRule::m4()) ==
          doctest::Approx(oracle::u_tilde_stat(y, n, 90, "epanechnikov", 2.0, m))
              .epsilon(1e-12));
  }

  // scale invariance
  std::vector<double> scaled(y);
  for (auto& v : scaled) v *= 0.004;
  auto wsc = TimeSeriesWindow::from_series(scaled);
  CHECK(u_tilde_stat(wy, 90, 90, epa, LagRule::m12()) ==
        doctest::Approx(u_tilde_stat(wsc, 90, 90, epa, LagRule::m12())).epsilon(1e-12));

  auto zeros = TimeSeriesWindow::from_series(std::vector<double>{0.0, 0.0, 0.0});
  CHECK_THROWS_AS(u_tilde_stat(zeros, 3, 3, epa, LagRule::fixed(0)), DegenerateDenominator);
}

TEST_CASE("streaming equals batch at every step") {
  const std::size_t len = 300;
  auto y = random_series(len, 30);
  auto batch = TimeSeriesWindow::from_series(y);
  TimeSeriesWindow incremental(len);
  KernelSpec epa{Kernel::epanechnikov(), 25.0};
  for (std::size_t n = 1; n <= len; ++n) {
    incremental.append(y[n - 1]);
    const double streaming = u_stat(incremental, n, epa);
    const double recomputed = u_stat(batch, n, epa);
    CHECK(streaming == doctest::Approx(recomputed).epsilon(1e-10));
    const double ts = u_tilde_stat(incremental, n, len, epa, LagRule::m3());
    const double tb = u_tilde_stat(batch, n, len, epa, LagRule::m3());
    CHECK(ts == doctest::Approx(tb).epsilon(1e-10));
  }
}

TEST_CASE("resolve_lag") {
  CHECK(resolve_lag(LagRule::m4(), 100) == 4);
  CHECK(resolve_lag(LagRule::m12(), 100) == 12);
  CHECK(resolve_lag(LagRule::m3(), 250) == 5);
  CHECK(resolve_lag(LagRule::m4(), 250) == 5);
  CHECK(resolve_lag(LagRule::m12(), 250) == 15);
  CHECK(resolve_lag(LagRule::fixed(7), 100) == 7);
  // clamped to n-1
  CHECK(resolve_lag(LagRule::fixed(10), 5) == 4);
  CHECK(resolve_lag(LagRule::m12(), 3) == 2);
  CHECK(resolve_lag(LagRule::fixed(0), 1) == 0);
}

TEST_CASE("residual transforms") {
  const std::vector<double> y{1.0, 2.0, 3.0};
  auto demeaned = apply_residual_mode(y, ResidualMode::demeaned);
  CHECK(demeaned[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(demeaned[1] == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
  CHECK(demeaned[2] == doctest::Approx(1.0).epsilon(1e-14));

  auto detrended = apply_residual_mode(y, ResidualMode::detrended);
  for (double r : detrended) CHECK(std::fabs(r) < 1e-12);

  auto same = apply_residual_mode(y, ResidualMode::none);
  CHECK(same == y);

  CHECK_THROWS_AS(apply_residual_mode(std::vector<double>{1.0}, ResidualMode::demeaned),
                  InsufficientData);
  CHECK_THROWS_AS(apply_residual_mode(std::vector<double>{1.0, 2.0}, ResidualMode::detrended),
                  InsufficientData);

  // demeaned output sums to ~0; detrended output orthogonal to (1, i)
  auto z = random_series(200, 44, 3.0);
  auto dm = apply_residual_mode(z, ResidualMode::demeaned);
  double norm = 0.0;
  for (double v : z) norm += v * v;
  norm = std::sqrt(norm);
  CHECK(std::fabs(compensated_sum(dm)) < 1e-9 * norm);

  auto dt = apply_residual_mode(z, ResidualMode::detrended);
  double dot1 = 0.0, doti = 0.0;
  for (std::size_t i = 0; i < dt.size(); ++i) {
    dot1 += dt[i];
    doti += dt[i] * static_cast<double>(i + 1);
  }
  CHECK(std::fabs(dot1) < 1e-9 * norm);
  CHECK(std::fabs(doti) < 1e-9 * norm * static_cast<double>(dt.size()));
}

TEST_CASE("window state invariants") {
  auto y = random_series(64, 50);
  auto w = TimeSeriesWindow::from_series(y);
  for (std::size_t i = 1; i <= 64; ++i) {
    CHECK(w.partial_sum(i) - w.partial_sum(i - 1) == doctest::Approx(y[i - 1]).epsilon(1e-12));
  }
  double qs = 0.0;
  for (double v : y) qs += v * v;
  CHECK(w.sum_of_squares(64) == doctest::Approx(qs).epsilon(1e-9));
  CHECK_THROWS_AS(TimeSeriesWindow::from_series(y, 10), ConfigError);  // n > N
}
