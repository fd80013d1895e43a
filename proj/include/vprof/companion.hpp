// SPDX-License-Identifier: MIT
//
// The companion Markov chain of the triple (delta, m, s).
//
// Conditionally on the current state (delta, m, s) with m >= 1, the next
// state is
//   delta' = delta + sum_{k=1..m} (g_k - 2),   g_k i.i.d. geometric(1/2)
//   m'     = m + delta'
//   s'     = s + m'
// The increment d = delta' - delta of a sum of m centred geometrics has the
// exact pmf  P(d) = C(d + 2m - 1, m - 1) * 2^{-(d + 2m)}  for d >= -m
// (equivalently: d + 2m fair-coin flips are needed to see m heads).  The
// chain is killed when m <= 0 and, in the stuck variant, frozen at the last
// state with m >= K once m would drop below K.
//
// Two sampling routes realize the same increment law exactly:
//   - m <= 64: lazy dyadic inverse CDF against the exact pmf (random bits
//     are revealed 64 at a time until the outcome is determined, so the
//     draw is exact, not truncated);
//   - m  > 64: count fair flips until the m-th head in 64-bit popcount
//     blocks, which is the defining construction itself.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "vprof/exact.hpp"
#include "vprof/profile_law.hpp"
#include "vprof/rng.hpp"

namespace vprof {

enum class ChainStatus { kAlive, kKilled, kStuck };

struct TripleState {
  std::int64_t delta = 0, m = 0, s = 0;
  ChainStatus status = ChainStatus::kAlive;

  TripleValue value() const { return TripleValue{delta, m, s}; }
};

// Exact increment probability P(delta' - delta = d | m), m >= 1, d >= -m.
BigRat increment_prob(std::int64_t m, std::int64_t d);

// Tail P(increment > d) in closed form: with J = d + 2m flips on the table,
// the m-th head is still missing iff Binomial(J, 1/2) <= m - 1.
BigRat increment_tail(std::int64_t m, std::int64_t d);

// Tabulated increment law with explicit tail bookkeeping: sum of the table
// plus `tail` is exactly 1.
struct StepPMF {
  std::int64_t delta = 0;          // state the table was built for
  std::int64_t m = 0;
  std::int64_t d_min = 0, d_max = 0;
  std::vector<BigRat> p;           // p[d - d_min]
  BigRat tail;                     // exact mass beyond d_max

  BigRat total() const;
};

// Table covering all increments up to tail mass < 2^-tail_bits.
StepPMF step_pmf(std::int64_t delta, std::int64_t m, int tail_bits = 128);

// One chain step.  Non-alive states are returned unchanged; m <= 0 kills.
TripleState step(const TripleState& z, Rng& rng);

// Trajectory of `steps` transitions from z0 (sequence has steps+1 entries).
// Once m would drop below K >= 1 the last state with m >= K is repeated
// forever (marked kStuck).  Requires z0.m >= K.
std::vector<TripleState> run_stuck(const TripleState& z0, std::int64_t K,
                                   std::int64_t steps, Rng& rng);

// Chain path rescaled by (n^{-1/2}, n^{-3/4}, n^{-1}) on the grid
// t_k = k n^{-1/4}, piecewise constant and right-continuous, run for
// floor(T n^{1/4}) + 1 transitions with sticking level K = ceil(eps n^{3/4}).
struct RescaledChainPath {
  std::int64_t n = 0;
  double T = 0;
  std::vector<double> t, delta, m, s;     // values at the grid points
  std::vector<TripleState> raw;

  // cadlag evaluation: value at the last grid point <= time
  double value_at(double time, int coord) const;
};

RescaledChainPath rescaled_chain(std::int64_t n, const TripleState& z0,
                                 double eps, double T, Rng& rng);

// Exact law of alive chain paths (m >= 1 throughout) from z1 at k1 to z2 at
// k2, conditioned on arriving at z2.  States with m > m_cap are discarded;
// the result is certified exact when m_cap >= z2.s, because every alive
// path to z2 satisfies m_j <= s_j <= z2.s.
struct ConditionedLaw {
  PathLaw law;
  bool exact_certificate = false;  // m_cap >= z2.s
};

ConditionedLaw conditional_path_law_dp(std::int64_t k1, std::int64_t k2,
                                       const TripleValue& z1,
                                       const TripleValue& z2,
                                       std::int64_t m_cap);

// CSV in the shared rescaled schema (t,delta,m,s), for overlay plots
// against rescaled tree profiles.
std::string chain_csv(const RescaledChainPath& path);

}  // namespace vprof
