// SPDX-License-Identifier: MIT
//
// Vertical profile of a binary tree and the derived triple path.
//
// The abscissa of a vertex is the number of right steps minus the number of
// left steps on its root path; the profile M records how many vertices sit
// at each abscissa.  From M we derive, over any abscissa window [a, b],
//   delta_i = M_i - M_{i-1}   (discrete derivative, M = 0 off the support)
//   S_i     = sum_{j <= i} M_j (discrete integral; S_r = n on the right).
// The rescaled version divides (delta, M, S) by (n^{1/2}, n^{3/4}, n) and
// spaces abscissas 1/lambda apart; lambda = n^{1/4} by default, with the
// density-normalized alternative lambda = (2n)^{1/4} also exposed.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace vprof {

struct VerticalProfile {
  int ell = 0;                       // leftmost occupied abscissa, <= 0
  std::vector<std::int64_t> counts;  // counts[i - ell] = vertices at abscissa i

  int r() const { return ell + static_cast<int>(counts.size()) - 1; }
  std::int64_t n() const {
    std::int64_t t = 0;
    for (auto c : counts) t += c;
    return t;
  }
  std::int64_t at(std::int64_t i) const {
    if (i < ell || i > r()) return 0;
    return counts[static_cast<std::size_t>(i - ell)];
  }
  bool valid() const;  // contiguous positive counts, ell <= 0 <= r

  friend auto operator<=>(const VerticalProfile&, const VerticalProfile&) = default;
};

// Shift the support so that it starts at abscissa 0; counts are unchanged.
// Idempotent.
VerticalProfile translate(const VerticalProfile& p);

// Integer triple path (delta, M, S) over the inclusive window [a, b].
struct TriplePath {
  std::int64_t a = 0, b = -1;
  std::vector<std::int64_t> delta, m, s;  // indexed by i - a

  std::size_t size() const { return delta.size(); }
};

TriplePath triple(const VerticalProfile& p, std::int64_t a, std::int64_t b);

enum class RescaleKind {
  kStandard,      // lambda = n^{1/4}
  kDensityTwoN,   // lambda = (2n)^{1/4}: m-coordinate is a spatial density
};

// Real-valued rescaled triple on the grid t_k = k / lambda, one row per
// abscissa of the support.  Evaluation between grid points interpolates
// linearly.
struct RescaledTriple {
  std::int64_t n = 0;
  double lambda = 1.0;
  std::vector<double> t, delta, m, s;

  // coord: 0 = delta, 1 = m, 2 = s.  Clamps outside the grid.
  double value_at(double time, int coord) const;
};

RescaledTriple rescale(const VerticalProfile& p,
                       RescaleKind kind = RescaleKind::kStandard);

// CSV emission.  Both schemas carry a leading "# format_version 1" comment
// line and are byte-deterministic for a given input.
std::string profile_csv(const VerticalProfile& p);     // header i,delta,m,s
std::string rescaled_csv(const RescaledTriple& p);     // header t,delta,m,s

// Profile serialized as "ell:r:m_ell,...,m_r" (the JSON map key format and
// the CLI input format).
std::string profile_key(const VerticalProfile& p);
VerticalProfile parse_profile_key(const std::string& key);

}  // namespace vprof
