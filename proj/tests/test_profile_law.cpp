// SPDX-License-Identifier: MIT

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "vprof/exact.hpp"
#include "vprof/profile_law.hpp"
#include "vprof/tree.hpp"

using namespace vprof;

namespace {

VerticalProfile make(int ell, std::vector<std::int64_t> counts) {
  VerticalProfile p;
  p.ell = ell;
  p.counts = std::move(counts);
  return p;
}

}  // namespace

TEST_CASE("closed-form counts reproduce the worked six-vertex instances") {
  CHECK(count_profile(make(-2, {1, 1, 3, 1})) == 3);
  CHECK(count_profile(make(0, {1, 1, 2, 1, 1})) == 1);
}

TEST_CASE("profiles that no tree realizes get count zero") {
  // Two vertices at the root abscissa but no neighbors to hang the second on.
  CHECK(count_profile(make(0, {2})) == 0);
  // A heavy column needs enough support next door.
  CHECK(count_profile(make(0, {1, 5, 1})) == 0);
}

TEST_CASE("the two-vertex law is the pair of single-step profiles") {
  const ProfileDistribution d = profile_distribution(2);
  CHECK(d.total == 2);
  CHECK(d.weight.at(make(-1, {1, 1})) == 1);
  CHECK(d.weight.at(make(0, {1, 1})) == 1);
}

TEST_CASE("law mass equals the Catalan number and covers the enumeration") {
  for (int n = 1; n <= 7; ++n) {
    const ProfileDistribution d = profile_distribution(n);
    CHECK(d.total == catalan(n));
    std::map<VerticalProfile, long> freq;
    enumerate_trees(n, [&](const BinaryTree& t) { ++freq[profile(t)]; });
    for (const auto& [p, c] : freq) CHECK(d.weight.at(p) == c);
  }
  CHECK_THROWS_AS(profile_distribution(kDistributionCap + 1), std::invalid_argument);
}

TEST_CASE("distribution JSON carries the version field and decimal counts") {
  const std::string j = distribution_json(profile_distribution(2));
  CHECK(j.find("\"format_version\":1") != std::string::npos);
  CHECK(j.find("\"n\":2") != std::string::npos);
  CHECK(j.find("\"total\":\"2\"") != std::string::npos);
  CHECK(j.find("\"-1:0:1,1\":\"1\"") != std::string::npos);
}

TEST_CASE("boundary conditions are validated") {
  BoundaryCondition bc;
  bc.k1 = 2;
  bc.k2 = 1;
  bc.z1 = {0, 1, 1};
  bc.z2 = {0, 1, 2};
  CHECK_FALSE(bc.well_formed());
  CHECK_THROWS_AS(conditional_path_law(6, bc), std::invalid_argument);
  bc.k1 = 1;
  bc.k2 = 2;
  CHECK(bc.well_formed());
  bc.k1 = -1;  // window must not straddle zero
  CHECK_FALSE(bc.well_formed());
}

TEST_CASE("conditional law matches a direct bucketing of the profile law") {
  const int n = 6;
  const ProfileDistribution d = profile_distribution(n);
  BoundaryCondition bc;
  bc.k1 = 1;
  bc.k2 = 2;
  bc.z1 = {0, 1, 5};  // delta_1 = 0, M_1 = 1, S_1 = 5
  bc.z2 = {0, 1, 6};
  const PathLaw law = conditional_path_law(d, bc);
  REQUIRE_FALSE(law.empty());

  // Independent re-derivation: filter profiles by the endpoints by hand.
  std::map<std::vector<std::int64_t>, BigRat> expect;
  BigRat mass(0);
  for (const auto& [p, w] : d.weight) {
    if (w == 0) continue;
    const TriplePath tp = triple(p, 1, 2);
    const std::vector<std::int64_t> key = {tp.delta[0], tp.m[0], tp.s[0],
                                           tp.delta[1], tp.m[1], tp.s[1]};
    if (key[0] != bc.z1.delta || key[1] != bc.z1.m || key[2] != bc.z1.s) continue;
    if (key[3] != bc.z2.delta || key[4] != bc.z2.m || key[5] != bc.z2.s) continue;
    expect[key] += BigRat(w);
    mass += BigRat(w);
  }
  REQUIRE(mass > 0);
  for (auto& [k, v] : expect) {
    v /= mass;
    v.canonicalize();
  }
  CHECK(law.prob == expect);

  BigRat total(0);
  for (const auto& [k, v] : law.prob) total += v;
  CHECK(total == 1);
}

TEST_CASE("impossible conditionings yield the empty law, not an error") {
  BoundaryCondition bc;
  bc.k1 = 1;
  bc.k2 = 2;
  bc.z1 = {0, 1, 1};
  bc.z2 = {0, 1, 100};  // S beyond the total mass at n = 6
  CHECK(conditional_path_law(6, bc).empty());
}

TEST_CASE("profile counts refuse invalid profiles") {
  VerticalProfile p = make(0, {1, 0, 1});  // interior zero breaks contiguity
  CHECK_FALSE(p.valid());
  CHECK_THROWS_AS(count_profile(p), std::invalid_argument);
}
