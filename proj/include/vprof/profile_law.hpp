// SPDX-License-Identifier: MIT
//
// Exact arithmetic for the law of the vertical profile.
//
// The number of n-vertex binary trees with a prescribed profile
// (m_ell, ..., m_r), m_0 >= 1, support containing 0, admits the product form
//
//   m_0 * C(m_{-1} + m_1, m_0 - 1) / (m_ell * m_r)
//       * prod_{ell <= i <= r, i != 0} C(m_{i-1} + m_{i+1} - 1, m_i - 1)
//
// with the boundary convention m_{ell-1} = m_{r+1} = 0 and C(a, b) = 0 for
// b > a.  The division is exact; this module asserts divisibility rather
// than rounding.  Everything here is integer/rational arithmetic: the
// conditioned-path comparison downstream is an identity check, not a
// statistical one.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vprof/exact.hpp"
#include "vprof/profile.hpp"

namespace vprof {

using BigCount = BigInt;

// Exact number of trees with profile p (possibly 0).  Throws on an invalid
// profile or if the product form fails to divide exactly (which would
// indicate an implementation bug, not bad input).
BigCount count_profile(const VerticalProfile& p);

struct ProfileDistribution {
  int n = 0;
  std::map<VerticalProfile, BigCount> weight;  // profile -> #trees
  BigCount total;                              // = Cat(n)
};

inline constexpr int kDistributionCap = 14;

// All profiles of total mass n with their exact tree counts, built from the
// product formula alone (no tree enumeration).  Keys cover every candidate
// tuple (contiguous positive counts, support containing 0), including the
// ones whose count is zero.
ProfileDistribution profile_distribution(int n, int cap = kDistributionCap);

// JSON dump: {"format_version":1,"n":..,"total":"..","profiles":{key:count}}
// with keys "ell:r:m_ell,...,m_r" and counts as decimal strings.
std::string distribution_json(const ProfileDistribution& d);

// One endpoint value of the triple path.
struct TripleValue {
  std::int64_t delta = 0, m = 0, s = 0;
  friend auto operator<=>(const TripleValue&, const TripleValue&) = default;
};

// Boundary data for a two-sided conditioning: the triple is pinned to z1 at
// abscissa k1 and z2 at abscissa k2, with the window on one side of 0.
struct BoundaryCondition {
  std::int64_t k1 = 0, k2 = 0;
  TripleValue z1, z2;

  bool well_formed() const {
    return ((0 < k1 && k1 < k2) || (k1 < k2 && k2 < 0)) && z1.m > 0 &&
           z2.m > 0;
  }
};

// Exact law over triple paths (Z_{k1}, ..., Z_{k2}); keys are the flattened
// (delta, m, s) values, probabilities are exact rationals summing to 1.
// An empty map signals a zero-probability conditioning event (this is a
// value, not an error: callers scan boundary grids).
struct PathLaw {
  std::int64_t k1 = 0, k2 = 0;
  std::map<std::vector<std::int64_t>, BigRat> prob;

  bool empty() const { return prob.empty(); }
};

// Law of the triple path over [k1, k2] under the uniform tree measure,
// conditioned on the two endpoint triples.
PathLaw conditional_path_law(int n, const BoundaryCondition& bc);
PathLaw conditional_path_law(const ProfileDistribution& d,
                             const BoundaryCondition& bc);

}  // namespace vprof
