// SPDX-License-Identifier: MIT
//
// Euler-Maruyama integration of the limiting cascade diffusion
//
//   d delta = sqrt(2|m|) dW,   dm = delta dt,   ds = m dt,
//
// stuck permanently at the last state before m would cross eps (a step that
// lands at m <= eps is rejected, matching the discrete chain's freeze).  The
// update order within a step is delta -> m -> s, mirroring the chain's
// cascade, and the scheme is plain explicit Euler-Maruyama: the noise
// coefficient depends on m only, not on delta, so the Milstein correction
// for the delta equation vanishes and nothing is gained by a higher-order
// scheme here.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "vprof/rng.hpp"
#include "vprof/stats.hpp"

namespace vprof {

struct DiffusionState {
  double delta = 0.0, m = 0.0, s = 0.0;
  double t = 0.0;
  bool stuck = false;
};

struct IntegratorConfig {
  double dt = 1e-3;
  double eps = 0.1;   // sticking level for the m-coordinate
  double T = 1.0;
  bool noise = true;  // test hook: false integrates the deterministic cascade
};

std::array<double, 3> drift(const DiffusionState& z);           // (0, delta, m)
std::array<double, 3> diffusion_coef(const DiffusionState& z);  // (sqrt(2|m|), 0, 0)

// Full path including the initial state; throws on non-finite states.
// Requires z0.m > cfg.eps.
std::vector<DiffusionState> integrate(const DiffusionState& z0,
                                      const IntegratorConfig& cfg, Rng& rng);

// (delta, m, s) at the prescribed times (each snapshot is the state at the
// last completed step with t <= time), without storing the path.
std::vector<std::array<double, 3>> integrate_marginals(
    const DiffusionState& z0, const IntegratorConfig& cfg,
    const std::vector<double>& times, Rng& rng);

// Two-sample KS comparison between the rescaled companion chain at each n
// and an Euler-Maruyama sample of the limit, per coordinate, at times
// {T/4, T/2, T}.  Two integrator step sizes run per n: a fine reference
// (T/1024) and the chain-matched coarse step n^{-1/4}.
struct KsCell {
  double time = 0.0;
  int coord = 0;  // 0 = delta, 1 = m, 2 = s
  TestReport report;
};

struct NComparison {
  std::int64_t n = 0;
  std::vector<KsCell> vs_fine;    // chain vs fine-step integrator
  std::vector<KsCell> vs_coarse;  // chain vs coarse-step integrator
};

struct ComparisonReport {
  std::array<double, 3> z0{};  // rescaled start
  double eps = 0.0, T = 0.0;
  int trials = 0;
  std::vector<NComparison> per_n;
};

ComparisonReport compare_chain_to_diffusion(
    const std::vector<std::int64_t>& n_list, const std::array<double, 3>& z0,
    double eps, double T, int trials, std::uint64_t seed);

std::string comparison_json(const ComparisonReport& r);
std::string diffusion_csv(const std::vector<DiffusionState>& path);

}  // namespace vprof
