// SPDX-License-Identifier: MIT

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <set>
#include <string>

#include "vprof/exact.hpp"
#include "vprof/profile.hpp"
#include "vprof/rng.hpp"
#include "vprof/sampler.hpp"
#include "vprof/tree.hpp"

using namespace vprof;

TEST_CASE("generator streams are deterministic and child streams are distinct") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(42);
  Rng c0 = c.child(0), c1 = c.child(1);
  bool differ = false;
  for (int i = 0; i < 16; ++i) differ = differ || (c0.next() != c1.next());
  CHECK(differ);
}

TEST_CASE("bounded draws and exact Bernoulli respect their supports") {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    CHECK(rng.below(10) < 10);
    CHECK(rng.below(1) == 0);
    const double u = rng.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  // bernoulli(k, k) is certain, bernoulli(0, k) impossible.
  for (int i = 0; i < 100; ++i) {
    CHECK(rng.bernoulli(5, 5));
    CHECK_FALSE(rng.bernoulli(0, 5));
  }
}

TEST_CASE("geometric on {1,2,...} with mean 2 via bit runs") {
  Rng rng(123);
  const int N = 200000;
  long long sum = 0;
  for (int i = 0; i < N; ++i) {
    const std::int64_t g = rng.geometric_half();
    CHECK(g >= 1);
    sum += g;
  }
  const double mean = static_cast<double>(sum) / N;
  // Var = 2, so 5 sigma is 5 sqrt(2/N) ~ 0.016.
  CHECK(std::fabs(mean - 2.0) < 0.016);
}

TEST_CASE("enumeration yields Catalan-many distinct valid trees") {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> codes;
    long long count = 0;
    enumerate_trees(n, [&](const BinaryTree& t) {
      ++count;
      CHECK(t.size() == n);
      CHECK(t.valid());
      codes.insert(t.preorder_code());
    });
    CHECK(BigInt(static_cast<long>(count)) == catalan(n));
    CHECK(static_cast<long long>(codes.size()) == count);
  }
  CHECK_THROWS_AS(enumerate_trees(0, [](const BinaryTree&) {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_trees(kEnumerationCap + 1, [](const BinaryTree&) {}),
                  std::invalid_argument);
}

TEST_CASE("abscissas and profile of a hand-built tree") {
  // root 0 with left child 1; node 1 with right child 2: abscissas 0, -1, 0.
  BinaryTree t;
  t.nodes = {{1, kNoChild}, {kNoChild, 2}, {kNoChild, kNoChild}};
  t.root = 0;
  REQUIRE(t.valid());
  const auto xs = abscissas(t);
  CHECK(xs == std::vector<std::int64_t>{0, -1, 0});
  const VerticalProfile p = profile(t);
  CHECK(p.ell == -1);
  CHECK(p.r() == 0);
  CHECK(p.counts == std::vector<std::int64_t>{1, 2});
  CHECK(p.n() == 3);
  CHECK(p.valid());
}

TEST_CASE("triple path implements discrete derivative and running sum") {
  VerticalProfile p;
  p.ell = -2;
  p.counts = {1, 1, 3, 1};  // the worked six-vertex example
  REQUIRE(p.valid());
  const TriplePath tp = triple(p, -3, 2);
  // window [-3, 2]: M = 0,1,1,3,1,0
  CHECK(tp.m == std::vector<std::int64_t>{0, 1, 1, 3, 1, 0});
  CHECK(tp.delta == std::vector<std::int64_t>{0, 1, 0, 2, -2, -1});
  CHECK(tp.s == std::vector<std::int64_t>{0, 1, 2, 5, 6, 6});
}

TEST_CASE("profile CSV matches the documented single-vertex row") {
  VerticalProfile p;
  p.ell = 0;
  p.counts = {1};
  CHECK(profile_csv(p) == "# format_version 1\ni,delta,m,s\n0,1,1,1\n");
}

TEST_CASE("rescaled triple normalizes total mass to one") {
  const VerticalProfile p = stream_profile(5000, 99);
  const RescaledTriple r = rescale(p);
  CHECK(r.n == 5000);
  CHECK(r.lambda == doctest::Approx(std::pow(5000.0, 0.25)));
  CHECK(r.s.back() == doctest::Approx(1.0));
  const RescaledTriple r2 = rescale(p, RescaleKind::kDensityTwoN);
  CHECK(r2.lambda == doctest::Approx(std::pow(10000.0, 0.25)));
  CHECK(r2.s.back() == doctest::Approx(1.0));
  // linear interpolation between grid points
  const double mid = 0.5 * (r.t[0] + r.t[1]);
  CHECK(r.value_at(mid, 1) == doctest::Approx(0.5 * (r.m[0] + r.m[1])));
}

TEST_CASE("profile keys round-trip and reject malformed input") {
  VerticalProfile p;
  p.ell = -2;
  p.counts = {1, 1, 3, 1};
  CHECK(profile_key(p) == "-2:1:1,1,3,1");
  CHECK(parse_profile_key("-2:1:1,1,3,1") == p);
  CHECK_THROWS_AS(parse_profile_key("-2:1:1,1"), std::invalid_argument);   // wrong arity
  CHECK_THROWS_AS(parse_profile_key("1:2:1,1"), std::invalid_argument);    // 0 outside support
  CHECK_THROWS_AS(parse_profile_key("-1:0:1,0"), std::invalid_argument);   // zero count
  CHECK_THROWS_AS(parse_profile_key("junk"), std::invalid_argument);
}

TEST_CASE("uniform sampler returns valid trees of the requested size") {
  for (const std::int64_t n : {1, 2, 3, 10, 257}) {
    const BinaryTree t = sample_uniform(n, 5);
    CHECK(t.size() == n);
    CHECK(t.valid());
  }
  CHECK(sample_uniform(1, 9).preorder_code() == sample_uniform(1, 12).preorder_code());
  CHECK_THROWS_AS(sample_uniform(kMaterializeCap + 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(stream_profile(kStreamCap + 1, 1), std::invalid_argument);
}

TEST_CASE("streamed profile equals the profile of the materialized tree") {
  for (const std::int64_t n : {1, 2, 7, 64, 1000, 12345}) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      CHECK(stream_profile(n, seed) == profile(sample_uniform(n, seed)));
    }
  }
}

TEST_CASE("sampler hits every four-vertex tree") {
  std::set<std::string> seen;
  for (std::uint64_t s = 0; s < 600; ++s)
    seen.insert(sample_uniform(4, 1000 + s).preorder_code());
  CHECK(seen.size() == 14);  // all Cat(4) shapes reached
}

TEST_CASE("translate shifts the support to start at zero and is idempotent") {
  VerticalProfile p;
  p.ell = -2;
  p.counts = {1, 1, 3, 1};
  const VerticalProfile q = translate(p);
  CHECK(q.ell == 0);
  CHECK(q.counts == p.counts);
  CHECK(translate(q) == q);
}
