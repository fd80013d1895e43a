// SPDX-License-Identifier: MIT

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "vprof/exact.hpp"
#include "vprof/fps.hpp"
#include "vprof/series_lab.hpp"

using namespace vprof;

namespace {

Fps geometric(int order) {  // 1/(1-t)
  Fps g(order);
  for (int k = 0; k <= order; ++k) g.set(k, BigRat(1));
  return g;
}

}  // namespace

TEST_CASE("series ring arithmetic") {
  const Fps one = Fps::constant(BigRat(1), 8);
  const Fps t = Fps::x(8);
  const Fps prod = (one + t) * (one - t);
  CHECK(prod.at(0) == 1);
  CHECK(prod.at(1) == 0);
  CHECK(prod.at(2) == -1);
  CHECK(prod.at(3) == 0);
  CHECK((one - t) * geometric(8) == one);
  CHECK(geometric(8).reciprocal() == one - t);
  CHECK(t.valuation() == 1);
  CHECK((t * t).valuation() == 2);
  CHECK(Fps(8).is_zero());
  CHECK(Fps(8).valuation() == 9);  // zero series: order + 1 by convention
  CHECK(t.truncated(3).order() == 3);
  CHECK(t.truncated(12).at(12) == 0);
}

TEST_CASE("powers, composition, square roots") {
  const Fps one = Fps::constant(BigRat(1), 10);
  const Fps t = Fps::x(10);
  const Fps p = (one + t).pow(4);
  CHECK(p.at(2) == 6);
  CHECK(p.at(4) == 1);
  CHECK((one + t).pow(0) == one);

  // compose 1/(1-u) with u = t + t^2: coefficients count compositions
  const Fps comp = geometric(10).compose(t + t * t);
  CHECK(comp.at(0) == 1);
  CHECK(comp.at(1) == 1);
  CHECK(comp.at(2) == 2);
  CHECK(comp.at(3) == 3);
  CHECK(comp.at(4) == 5);  // Fibonacci

  CHECK(((one + t) * (one + t)).sqrt() == one + t);
  const Fps q = (one + t).sqrt();
  CHECK(q.at(1) == BigRat(1, 2));
  CHECK(q.at(2) == BigRat(-1, 8));
  CHECK(q * q == one + t);
  CHECK_THROWS_AS(t.sqrt(), std::domain_error);  // odd valuation
  // 2 is not a rational square
  CHECK_THROWS_AS((Fps::constant(BigRat(2), 10) + t).sqrt(), std::domain_error);
  // even valuation with a square leading coefficient is fine; the root of a
  // valuation-2v series is exact only to order - v
  const Fps shifted = (t * t * (one + t)).sqrt();
  CHECK(shifted.valuation() == 1);
  CHECK(shifted.order() == 9);
  CHECK(shifted * shifted == (t * t * (one + t)).truncated(9));
}

TEST_CASE("fixed-point solver reproduces the Catalan series") {
  const int N = 16;
  const Fps one = Fps::constant(BigRat(1), N);
  const Fps t = Fps::x(N);
  const Fps T = Fps::fixed_point(
      [&](const Fps& cur) { return t * (one + cur) * (one + cur); }, N);
  CHECK(T.at(0) == 0);
  for (int k = 1; k <= 12; ++k) CHECK(T.at(k) == BigRat(catalan(k)));
}

TEST_CASE("algebraic system passes its internal identities") {
  const AlgebraicSystem sys = solve_algebraic(32);
  CHECK(sys.order == 32);
  CHECK(sys.T.at(0) == 0);
  for (int k = 1; k <= 10; ++k) CHECK(sys.T.at(k) == BigRat(catalan(k)));
  // y = t T has valuation 2
  CHECK(sys.y.valuation() == 2);
  // W(0) = 0 and W * W = U (asserted internally too)
  CHECK(sys.W.at(0) == 0);
  CHECK((sys.W * sys.W).truncated(20) == sys.U.truncated(20));
  // B = 1 + 2U + 2U^2 + ... as a series in U means B - 1 - 2U has U-order 2
  const Fps lhs = (Fps::constant(BigRat(1), 32) - sys.U) * sys.B;
  CHECK(lhs == Fps::constant(BigRat(1), 32) + sys.U);
}

TEST_CASE("branch series at small abscissas match brute enumeration") {
  const AlgebraicSystem sys = solve_algebraic(24);
  for (int i = -3; i <= 3; ++i) {
    const Fps h = branch_gf(sys, i);
    const std::vector<BigInt> ref = brute_branches(i, 9);
    for (int k = 0; k <= 9; ++k) CHECK(h.at(k) == BigRat(ref[static_cast<std::size_t>(k)]));
  }
}

TEST_CASE("the substitution control breaks the oracle in the documented way") {
  const AlgebraicSystem err = solve_algebraic(16, YConvention::kTMinusOne);
  // with y = t(T-1) the center series picks up -2 at first order
  CHECK(branch_gf(err, 0).at(1) == BigRat(-2));
  const std::vector<BigInt> ref = brute_branches(0, 8);
  bool mismatch = false;
  const Fps h = branch_gf(err, 0);
  for (int k = 0; k <= 8; ++k)
    mismatch = mismatch || h.at(k) != BigRat(ref[static_cast<std::size_t>(k)]);
  CHECK(mismatch);
  // the control system has no square-root series and no edge/fork forms
  CHECK_THROWS_AS(fork_second_moment(err), std::invalid_argument);
  CHECK_THROWS_AS(external_edge_gf(err, 1, 3, 2), std::invalid_argument);
}

TEST_CASE("edge zone table agrees with the direct extraction") {
  const AlgebraicSystem sys = solve_algebraic(40);
  for (int a = 1; a <= 2; ++a)
    for (int b = a; b <= a + 3; ++b)
      for (int x = a - 2; x <= b + 2; ++x) {
        const EdgeZoneCheck chk = external_edge_gf(sys, a, b, x);
        CHECK(chk.equal);
      }
  // q = 0 collapses to the zero series
  const EdgeZoneCheck zero = external_edge_gf(sys, 2, 2, 2);
  CHECK(zero.closed.is_zero());
  CHECK_THROWS_AS(external_edge_gf(sys, 3, 1, 2), std::invalid_argument);
}

TEST_CASE("fork resummation closes and its growth stays bounded") {
  const AlgebraicSystem sys = solve_algebraic(32);
  const ForkCheck fc = fork_second_moment(sys);
  CHECK(fc.equal);
  REQUIRE_FALSE(fc.growth.empty());
  for (const auto& [n, v] : fc.growth) {
    CHECK(v > 0.0);
    CHECK(v < 2.0);
    CHECK(n >= 6);
  }
}

TEST_CASE("marked counts at tiny sizes") {
  // the one-node tree has its single vertex at abscissa 0
  CHECK(marked_count(1, {0}) == 1);
  CHECK(marked_count(1, {1}) == 0);
  // two-node trees: left chain (abscissas 0,-1) and right chain (0,1)
  CHECK(marked_count(2, {0, 0}) == 2);
  CHECK(marked_count(2, {1, 1}) == 1);
  CHECK(marked_count(2, {1, 0}) == 1);
  CHECK(marked_count(2, {-1, 1}) == 0);
}

TEST_CASE("exact displacement moments, both routes") {
  CHECK(delta_moment_exact(2, 2, 1) == BigRat(1, 2));
  CHECK(delta_moment_exact(2, 2, 1, MomentRoute::kMarks) == BigRat(1, 2));
  for (int n = 2; n <= 6; ++n) {
    for (int p = 1; p <= 4; ++p) {
      CHECK(moment_exact(n, p, 0, 1, MomentRoute::kProfile) ==
            moment_exact(n, p, 0, 1, MomentRoute::kMarks));
      CHECK(moment_exact(n, p, -2, 1, MomentRoute::kProfile) ==
            moment_exact(n, p, -2, 1, MomentRoute::kMarks));
    }
  }
  // first moment decomposes over the mean profile by linearity
  CHECK(moment_exact(5, 1, -2, 1) ==
        profile_moment_exact(5, 1, 2) - profile_moment_exact(5, 1, 1) -
            profile_moment_exact(5, 1, -1) + profile_moment_exact(5, 1, -2));
  // profile moments: E[M_0] over the two 2-node trees is 1
  CHECK(profile_moment_exact(2, 1, 0) == 1);
  CHECK(profile_moment_exact(2, 1, 1) == BigRat(1, 2));
  CHECK(profile_moment_exact(2, 2, 1) == BigRat(1, 2));
}

TEST_CASE("gaussian-ratio probe carries exact ingredients") {
  const BonusCheck bc = bonus_moment_check(8, 1, 1, 2);
  CHECK(bc.mu == doctest::Approx(std::pow(8.0, -0.25)));
  CHECK(bc.numerator == moment_exact(8, 2, 1, 2));
  CHECK(bc.denominator == 2 * profile_moment_exact(8, 1, 1));
  CHECK(bc.ratio * bc.denominator == bc.numerator);
  CHECK_THROWS_AS(bonus_moment_check(2, 1, 0, 14), std::invalid_argument);
  CHECK_THROWS_AS(bonus_moment_check(8, 4, 0, 1), std::invalid_argument);
}

TEST_CASE("singular exponents fit to the predicted quarter powers") {
  const ExponentProbe probe = singular_exponent_probe(128);
  CHECK(std::fabs(probe.slope_u - 0.25) < 0.02);
  CHECK(std::fabs(probe.slope_b + 0.25) < 0.02);
  CHECK(probe.fps_vs_closed < 1e-9);
}
