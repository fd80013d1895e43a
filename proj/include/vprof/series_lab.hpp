// SPDX-License-Identifier: MIT
//
// Exact generating-function laboratory for the vertical profile.
//
// Everything here is a theorem checker over exact rationals:
//
//  * the algebraic system  T = t(1+T)^2,  y = tT,  U = y(1+U)^2,
//    B = (1-4y)^{-1/2} = (1+U)/(1-U),  W = t(1+T)(1+W^2)  (so W^2 = U),
//    solved as truncated power series in t;
//  * branch generating functions H_i counting, per tree size, the external
//    (childless) positions at abscissa i, both in closed form B*W^{|i|}
//    and by brute-force tree enumeration;
//  * closed forms for the four-term alternating combination
//    H_{a-x} - H_{a+1-x} - H_{b-x} + H_{b+1-x}, zone by zone in x;
//  * the fork resummation  sum_{x>=1} H_x (H_{x-1} - H_x)^2
//    = B^3 W (1-W)^2 / (1-W^3);
//  * exact displacement moments E[(Delta_{b+1}-Delta_{a+1})^p] and
//    E[(Delta_i)^p] over uniform n-node trees, computed by two independent
//    routes (profile distribution vs direct tree enumeration);
//  * a numeric probe of the quarter-power singular exponents at t = 1/4.
//
// The y convention is switchable: kTT uses y = tT, kTMinusOne uses the
// variant y = t(T-1).  Only kTT reproduces the enumeration; the variant is
// kept as a negative control and must disagree with the brute counts.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vprof/exact.hpp"
#include "vprof/fps.hpp"
#include "vprof/profile_law.hpp"

namespace vprof {

enum class YConvention { kTT, kTMinusOne };

struct AlgebraicSystem {
  int order = 0;
  YConvention conv = YConvention::kTT;
  Fps T, y, U, B;
  Fps W;  // square root of U; only set for kTT (U has odd valuation otherwise)
};

// Solves the system to the given truncation order.  Asserts internally that
// the two expressions for B agree and (for kTT) that W*W == U; throws if not.
AlgebraicSystem solve_algebraic(int order, YConvention conv = YConvention::kTT);

// Generating function of external positions at abscissa i: B*W^{|i|} under
// kTT, and the literal B*U^{|i|} under the kTMinusOne control.
Fps branch_gf(const AlgebraicSystem& sys, int i);

// Brute-force coefficients of the same series: entry k counts, over all
// k-node trees, the external positions at abscissa i (the empty tree counts
// once at abscissa 0).  Requires max_n <= kEnumerationCap.
std::vector<BigInt> brute_branches(int i, int max_n);

// Four-term alternating combination of branch series and its closed form
// for the zone containing x (with q = b - a):
//   q = 0                     0
//   x <= a                    B(1-W) W^{a-x}   (1-W^q)
//   x = a+1  or  x = b        B(W-1) (1 + W^{q-1})
//   a+1 < x < b               B(W-1) (W^{x-a-1} + W^{b-x})
//   x >= b+1                  B(1-W) W^{x-b-1} (1-W^q)
// Requires a <= b and sys.conv == kTT.
struct EdgeZoneCheck {
  Fps direct, closed;
  bool equal = false;
};
EdgeZoneCheck external_edge_gf(const AlgebraicSystem& sys, int a, int b, int x);

// Fork resummation: direct sum over x >= 1 against the closed form, plus
// the growth sequence Cat(n) * E[(Delta_0)^2] * sqrt(n) / 4^n for
// n = 6..14, which the closed form's singularity says stays bounded.
struct ForkCheck {
  Fps direct, closed;
  bool equal = false;
  std::vector<std::pair<int, double>> growth;
};
ForkCheck fork_second_moment(const AlgebraicSystem& sys);

// Sum over all n-node trees of the product, over the mark multiset, of the
// occupation count at that abscissa.  Requires n <= kEnumerationCap and at
// most 6 marks.
BigInt marked_count(int n, const std::vector<int>& marks);

enum class MomentRoute { kProfile, kMarks };

// E[(Delta_{b+1} - Delta_{a+1})^p] over uniform n-node trees, exact.
// Requires a < b and p >= 1.
BigRat moment_exact(int n, int p, int a, int b, MomentRoute route = MomentRoute::kProfile);
BigRat moment_exact(const ProfileDistribution& dist, int p, int a, int b);

// E[(Delta_i)^p], exact.
BigRat delta_moment_exact(int n, int p, int i, MomentRoute route = MomentRoute::kProfile);
BigRat delta_moment_exact(const ProfileDistribution& dist, int p, int i);

// E[(M_a)^r], exact.
BigRat profile_moment_exact(int n, int r, int a, MomentRoute route = MomentRoute::kProfile);
BigRat profile_moment_exact(const ProfileDistribution& dist, int r, int a);

// Exact finite-n check of the Gaussian-increment prediction: the ratio
//   E[(Delta_{b+1}-Delta_{a+1})^{2r}] / ((2r-1)!! (2(b-a))^r E[(M_a)^r])
// should be close to 1 when mu = (b-a) n^{-1/4} is small.  Requires
// 0 <= a < b and mu <= 2.
struct BonusCheck {
  int n = 0, r = 0, a = 0, b = 0;
  double mu = 0.0;
  BigRat numerator, denominator, ratio;
};
BonusCheck bonus_moment_check(int n, int r, int a, int b);

// Numeric probe of the singular behaviour at t = 1/4: fits the slopes of
// log(1-U) and log(B) against log(1-4t) on a window next to the
// singularity using closed-form algebraic evaluations, and cross-checks
// the truncated series against the closed forms well inside the disk.
struct ExponentProbe {
  double slope_u = 0.0;       // expected near +1/4
  double slope_b = 0.0;       // expected near -1/4
  double fps_vs_closed = 0.0; // max |series eval - closed form| at t = 0.2
};
ExponentProbe singular_exponent_probe(int order);

}  // namespace vprof
