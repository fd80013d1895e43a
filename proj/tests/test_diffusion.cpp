// SPDX-License-Identifier: MIT

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "vprof/diffusion.hpp"

using namespace vprof;

TEST_CASE("drift and noise coefficients") {
  const DiffusionState z{2.0, 9.0, 5.0, 0.0, false};
  const auto mu = drift(z);
  CHECK(mu[0] == 0.0);
  CHECK(mu[1] == 2.0);
  CHECK(mu[2] == 9.0);
  const auto sig = diffusion_coef(z);
  CHECK(sig[0] == doctest::Approx(std::sqrt(18.0)));
  CHECK(sig[1] == 0.0);
  CHECK(sig[2] == 0.0);
}

TEST_CASE("noiseless integration is the explicit Euler cascade") {
  IntegratorConfig cfg;
  cfg.dt = 0.25;
  cfg.T = 1.0;
  cfg.eps = 0.01;
  cfg.noise = false;
  Rng rng(1);
  const auto path = integrate({1.0, 2.0, 0.0, 0.0, false}, cfg, rng);
  REQUIRE(path.size() == 5);
  // delta stays, m grows by delta*dt, s accumulates m after the m-update
  double m = 2.0, s = 0.0;
  for (std::size_t k = 1; k < path.size(); ++k) {
    m += 1.0 * cfg.dt;
    s += m * cfg.dt;
    CHECK(path[k].delta == doctest::Approx(1.0));
    CHECK(path[k].m == doctest::Approx(m));
    CHECK(path[k].s == doctest::Approx(s));
    CHECK(path[k].t == doctest::Approx(0.25 * static_cast<double>(k)));
  }
}

TEST_CASE("paths stick permanently, frozen before the crossing step") {
  IntegratorConfig cfg;
  cfg.dt = 0.25;
  cfg.T = 2.0;
  cfg.eps = 1.75;
  cfg.noise = false;
  Rng rng(1);
  // delta = -1 would drag m from 2.0 to 1.75 <= eps on the first update;
  // that update is rejected and the whole state freezes at its start value.
  const auto path = integrate({-1.0, 2.0, 0.0, 0.0, false}, cfg, rng);
  REQUIRE(path.size() == 9);
  CHECK(path[1].stuck);
  for (std::size_t k = 1; k < path.size(); ++k) {
    CHECK(path[k].m == doctest::Approx(2.0));
    CHECK(path[k].delta == doctest::Approx(-1.0));
    CHECK(path[k].s == doctest::Approx(0.0));
    CHECK(path[k].t == doctest::Approx(0.25 * static_cast<double>(k)));
  }
}

TEST_CASE("start at or below the sticking level is rejected") {
  IntegratorConfig cfg;
  Rng rng(7);
  CHECK_THROWS_AS(integrate({0.0, 0.05, 0.0, 0.0, false}, cfg, rng),
                  std::invalid_argument);
}

TEST_CASE("overflow to non-finite values is an error, not a NaN path") {
  IntegratorConfig cfg;
  cfg.dt = 10.0;
  cfg.T = 10.0;
  cfg.noise = false;
  Rng rng(7);
  CHECK_THROWS_AS(integrate({1e308, 1e308, 0.0, 0.0, false}, cfg, rng),
                  std::runtime_error);
}

TEST_CASE("marginal snapshots agree with the stored path") {
  IntegratorConfig cfg;
  cfg.dt = 1e-2;
  cfg.T = 1.0;
  const DiffusionState z0{0.0, 1.0, 0.0, 0.0, false};
  Rng a(99), b(99);
  const auto path = integrate(z0, cfg, a);
  const std::vector<double> times{0.0, 0.25, 0.5, 1.0};
  const auto snaps = integrate_marginals(z0, cfg, times, b);
  REQUIRE(snaps.size() == times.size());
  for (std::size_t j = 0; j < times.size(); ++j) {
    const auto k = static_cast<std::size_t>(
        std::llround(std::floor(times[j] / cfg.dt + 1e-9)));
    CHECK(snaps[j][0] == path[k].delta);
    CHECK(snaps[j][1] == path[k].m);
    CHECK(snaps[j][2] == path[k].s);
  }
}

TEST_CASE("noise actually spreads the ensemble") {
  IntegratorConfig cfg;
  cfg.dt = 1e-2;
  cfg.T = 1.0;
  Rng rng(5);
  double mn = 1e300, mx = -1e300;
  for (int i = 0; i < 64; ++i) {
    const auto path = integrate({0.0, 1.0, 0.0, 0.0, false}, cfg, rng);
    const double d = path.back().delta;
    mn = std::min(mn, d);
    mx = std::max(mx, d);
  }
  CHECK(mx - mn > 1.0);  // Var(delta_1) ~ 2, so the range is order 5
}

TEST_CASE("chain-vs-limit comparison report has the advertised shape") {
  const ComparisonReport rep = compare_chain_to_diffusion(
      {16, 81}, {0.0, 1.0, 0.0}, 0.1, 1.0, 60, 123);
  REQUIRE(rep.per_n.size() == 2);
  CHECK(rep.per_n[0].n == 16);
  CHECK(rep.per_n[1].n == 81);
  for (const auto& nc : rep.per_n) {
    REQUIRE(nc.vs_fine.size() == 9);
    REQUIRE(nc.vs_coarse.size() == 9);
    for (const auto& cell : nc.vs_fine) {
      CHECK(cell.report.statistic >= 0.0);
      CHECK(cell.report.statistic <= 1.0);
      CHECK(cell.report.p_value >= 0.0);
      CHECK(cell.report.p_value <= 1.0);
      CHECK(cell.report.n1 == 60);
      CHECK(cell.report.n2 == 60);
    }
  }
  const std::string js = comparison_json(rep);
  CHECK(js.find("\"per_n\"") != std::string::npos);
  CHECK(js.find("\"vs_fine\"") != std::string::npos);
  CHECK(js.find("\"trials\":60") != std::string::npos);
}

TEST_CASE("diffusion CSV uses the shared path schema") {
  IntegratorConfig cfg;
  cfg.dt = 0.5;
  cfg.T = 1.0;
  Rng rng(3);
  const auto path = integrate({0.0, 1.0, 0.0, 0.0, false}, cfg, rng);
  const std::string csv = diffusion_csv(path);
  CHECK(csv.rfind("# format_version 1\nt,delta,m,s\n", 0) == 0);
  // one data row per state
  std::size_t rows = 0;
  for (const char c : csv) rows += c == '\n';
  CHECK(rows == 2 + path.size());
}
