// SPDX-License-Identifier: MIT

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "vprof/companion.hpp"
#include "vprof/exact.hpp"
#include "vprof/stats.hpp"

using namespace vprof;

TEST_CASE("increment probabilities match the closed form at small m") {
  // P(d | m) = C(d + 2m - 1, m - 1) 2^{-(d+2m)}
  CHECK(increment_prob(1, -1) == BigRat(1, 2));
  CHECK(increment_prob(1, 0) == BigRat(1, 4));
  CHECK(increment_prob(1, 1) == BigRat(1, 8));
  CHECK(increment_prob(2, -2) == BigRat(1, 4));
  CHECK(increment_prob(2, -1) == BigRat(1, 4));
  CHECK(increment_prob(2, 0) == BigRat(3, 16));
  CHECK(increment_prob(3, -3) == BigRat(1, 8));
  // below the support
  CHECK(increment_prob(2, -3) == 0);
}

TEST_CASE("closed-form tail equals one minus the partial sums") {
  for (const std::int64_t m : {1, 2, 3, 7, 20}) {
    BigRat partial(0);
    for (std::int64_t d = -m; d <= 25; ++d) {
      partial += increment_prob(m, d);
      CHECK(increment_tail(m, d) == 1 - partial);
    }
  }
}

TEST_CASE("tabulated kernel carries its mass exactly") {
  for (const std::int64_t m : {1, 5, 17}) {
    const StepPMF pmf = step_pmf(0, m);
    CHECK(pmf.d_min == -m);
    CHECK(pmf.total() == 1);
    BigRat table(0);
    for (const auto& p : pmf.p) table += p;
    CHECK(table + pmf.tail == 1);
    // the tail really is tiny
    CHECK(pmf.tail < pow2(-128));
  }
}

TEST_CASE("chain steps cascade and kill at the boundary") {
  Rng rng(2024);
  TripleState z{3, 5, 11, ChainStatus::kAlive};
  for (int i = 0; i < 200; ++i) {
    const TripleState nxt = step(z, rng);
    if (z.status != ChainStatus::kAlive) {
      CHECK(nxt.delta == z.delta);
      CHECK(nxt.m == z.m);
      CHECK(nxt.s == z.s);
      break;
    }
    CHECK(nxt.m == z.m + nxt.delta);
    CHECK(nxt.s == z.s + nxt.m);
    z = nxt;
  }
  TripleState dead{0, 0, 5, ChainStatus::kAlive};
  const TripleState after = step(dead, rng);
  CHECK(after.status == ChainStatus::kKilled);
  CHECK(after.m == 0);
  CHECK(after.s == 5);
}

TEST_CASE("empirical one-step law matches the exact kernel at m = 1") {
  Rng rng(555);
  const std::int64_t N = 40000;
  // cells: d = -1, 0, 1, >= 2 with exact masses 1/2, 1/4, 1/8, 1/8
  std::vector<std::int64_t> counts(4, 0);
  const TripleState z{0, 1, 0, ChainStatus::kAlive};
  for (std::int64_t i = 0; i < N; ++i) {
    const std::int64_t d = step(z, rng).delta;
    ++counts[static_cast<std::size_t>(std::min<std::int64_t>(d + 1, 3))];
  }
  // chi-square with unequal cell masses, done directly
  const double exact[4] = {0.5, 0.25, 0.125, 0.125};
  double stat = 0;
  for (int c = 0; c < 4; ++c) {
    const double e = exact[c] * static_cast<double>(N);
    const double diff = static_cast<double>(counts[static_cast<std::size_t>(c)]) - e;
    stat += diff * diff / e;
  }
  CHECK(stat < 16.27);  // chi-square(3) quantile at p = 1e-3
}

TEST_CASE("both sampling routes draw from the same increment law") {
  // The implementation switches route at m = 64: check the moments on both
  // sides of the split with the same exact SE bands (5 sigma).
  for (const std::int64_t m : {64, 65}) {
    Rng rng(808 + static_cast<std::uint64_t>(m));
    const std::int64_t N = 200000;
    const TripleState z{0, m, 0, ChainStatus::kAlive};
    double sx = 0, sx2 = 0;
    for (std::int64_t i = 0; i < N; ++i) {
      const auto d = static_cast<double>(step(z, rng).delta);
      sx += d;
      sx2 += d * d;
    }
    const double mean = sx / static_cast<double>(N);
    const double var = sx2 / static_cast<double>(N) - mean * mean;
    const double md = static_cast<double>(m);
    CHECK(std::fabs(mean) < 5 * std::sqrt(2 * md / static_cast<double>(N)));
    CHECK(std::fabs(var - 2 * md) <
          5 * std::sqrt((26 * md + 8 * md * md) / static_cast<double>(N)));
  }
}

TEST_CASE("stuck runs freeze at the last state above the level") {
  Rng rng(17);
  const TripleState z0{0, 3, 3, ChainStatus::kAlive};
  const auto path = run_stuck(z0, 3, 400, rng);
  CHECK(path.size() == 401);
  CHECK(path.front().value() == z0.value());
  bool frozen = false;
  for (std::size_t k = 1; k < path.size(); ++k) {
    CHECK(path[k].m >= 3);  // never below the sticking level
    if (frozen) {
      CHECK(path[k].value() == path[k - 1].value());
      CHECK(path[k].status == ChainStatus::kStuck);
    } else if (path[k].status == ChainStatus::kStuck) {
      frozen = true;
    }
  }
  CHECK(frozen);  // with 400 steps from m = 3 the chain sticks a.s.
  CHECK_THROWS_AS(run_stuck({0, 2, 2, ChainStatus::kAlive}, 3, 5, rng),
                  std::invalid_argument);
}

TEST_CASE("rescaled chain lives on the n^{-1/4} grid with cadlag reads") {
  Rng rng(31);
  const std::int64_t n = 256;  // lambda = 4
  const TripleState z0{0, 64, 0, ChainStatus::kAlive};
  const RescaledChainPath path = rescaled_chain(n, z0, 0.1, 1.0, rng);
  CHECK(path.raw.size() == 6);  // floor(T lambda) + 1 transitions, +1 for t=0
  CHECK(path.t[1] == doctest::Approx(0.25));
  CHECK(path.m[0] == doctest::Approx(64.0 / std::pow(256.0, 0.75)));
  // value_at is right-continuous with left limits
  CHECK(path.value_at(0.25, 1) == doctest::Approx(path.m[1]));
  CHECK(path.value_at(0.2499, 1) == doctest::Approx(path.m[0]));
  CHECK(path.value_at(-1.0, 1) == doctest::Approx(path.m[0]));
  CHECK(path.value_at(99.0, 1) == doctest::Approx(path.m.back()));
}

TEST_CASE("bridge law from the kernel is certified and normalized") {
  // One intermediate step: z1 = (0, 1, 1) at k=1 to z2 at k=3.
  const TripleValue z1{0, 1, 1};
  const TripleValue z2{0, 2, 5};  // reachable: m path 1 -> 2 -> 2
  const ConditionedLaw law = conditional_path_law_dp(1, 3, z1, z2, z2.s);
  CHECK(law.exact_certificate);
  REQUIRE_FALSE(law.law.empty());
  BigRat total(0);
  for (const auto& [k, v] : law.law.prob) {
    CHECK(static_cast<std::int64_t>(k.size()) == 9);  // three triples
    total += v;
  }
  CHECK(total == 1);
  // Capped search below the terminal mass loses the certificate.
  CHECK_FALSE(conditional_path_law_dp(1, 3, z1, z2, 1).exact_certificate);
}

TEST_CASE("bridge probabilities equal normalized kernel products by hand") {
  // Paths (m_1, m_2, m_3) = (1, m, 2) with s_3 = 5 force m = 2:
  // the law must therefore be a point mass.
  const TripleValue z1{0, 1, 1};
  const TripleValue z2{0, 2, 5};
  const ConditionedLaw law = conditional_path_law_dp(1, 3, z1, z2, z2.s);
  REQUIRE(law.law.prob.size() == 1);
  const auto& [key, p] = *law.law.prob.begin();
  CHECK(p == 1);
  CHECK(key == std::vector<std::int64_t>{0, 1, 1, 1, 2, 3, 0, 2, 5});
}

TEST_CASE("chain CSV uses the shared rescaled schema") {
  Rng rng(4);
  const RescaledChainPath path =
      rescaled_chain(16, {0, 8, 0, ChainStatus::kAlive}, 0.1, 1.0, rng);
  const std::string csv = chain_csv(path);
  CHECK(csv.rfind("# format_version 1\nt,delta,m,s\n", 0) == 0);
}
