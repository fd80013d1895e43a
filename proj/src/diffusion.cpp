// SPDX-License-Identifier: MIT

#include "vprof/diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "vprof/companion.hpp"

namespace vprof {

namespace {

void append_f17(std::string& out, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

void check_finite(const DiffusionState& z) {
  if (!std::isfinite(z.delta) || !std::isfinite(z.m) || !std::isfinite(z.s))
    throw std::runtime_error("diffusion state diverged to non-finite values");
}

// One Euler-Maruyama step in place.  An update that would land at m <= eps
// is rejected and the state freezes where it is — the same pre-crossing
// convention the discrete chain uses, so the stuck atoms of both processes
// sit on the same side of the barrier and their laws can actually converge.
void em_step(DiffusionState& z, double dt, double sqrt_dt, double eps,
             bool noise, Rng& rng) {
  if (!z.stuck) {
    double d = z.delta;
    if (noise) d += std::sqrt(2.0 * std::fabs(z.m)) * sqrt_dt * rng.normal();
    const double m_next = z.m + d * dt;
    if (m_next <= eps) {
      z.stuck = true;
    } else {
      z.delta = d;
      z.m = m_next;
      z.s += m_next * dt;
      check_finite(z);
    }
  }
  z.t += dt;
}

}  // namespace

std::array<double, 3> drift(const DiffusionState& z) {
  return {0.0, z.delta, z.m};
}

std::array<double, 3> diffusion_coef(const DiffusionState& z) {
  return {std::sqrt(2.0 * std::fabs(z.m)), 0.0, 0.0};
}

std::vector<DiffusionState> integrate(const DiffusionState& z0,
                                      const IntegratorConfig& cfg, Rng& rng) {
  if (!(cfg.dt > 0) || !(cfg.T > 0)) throw std::invalid_argument("integrate: dt and T must be positive");
  if (!(z0.m > cfg.eps)) throw std::invalid_argument("integrate: start must satisfy m > eps");
  const auto steps = static_cast<std::int64_t>(std::llround(cfg.T / cfg.dt));
  const double sqrt_dt = std::sqrt(cfg.dt);
  std::vector<DiffusionState> path;
  path.reserve(static_cast<std::size_t>(steps) + 1);
  DiffusionState z = z0;
  z.t = 0.0;
  z.stuck = false;
  path.push_back(z);
  for (std::int64_t k = 0; k < steps; ++k) {
    em_step(z, cfg.dt, sqrt_dt, cfg.eps, cfg.noise, rng);
    z.t = static_cast<double>(k + 1) * cfg.dt;  // avoid accumulated rounding
    path.push_back(z);
  }
  return path;
}

std::vector<std::array<double, 3>> integrate_marginals(
    const DiffusionState& z0, const IntegratorConfig& cfg,
    const std::vector<double>& times, Rng& rng) {
  if (!(cfg.dt > 0) || !(cfg.T > 0)) throw std::invalid_argument("integrate_marginals: dt and T must be positive");
  if (!(z0.m > cfg.eps)) throw std::invalid_argument("integrate_marginals: start must satisfy m > eps");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (times[i] < times[i - 1]) throw std::invalid_argument("integrate_marginals: times must be sorted");
  const auto steps = static_cast<std::int64_t>(std::llround(cfg.T / cfg.dt));
  const double sqrt_dt = std::sqrt(cfg.dt);
  // Snapshot index for each time: last completed step with k*dt <= time
  // (a hair of slack so times landing on a grid point stay there).
  std::vector<std::int64_t> snap_at;
  snap_at.reserve(times.size());
  for (double tm : times) {
    auto k = static_cast<std::int64_t>(std::floor(tm / cfg.dt + 1e-9));
    snap_at.push_back(std::min(std::max(k, std::int64_t{0}), steps));
  }
  std::vector<std::array<double, 3>> out;
  out.reserve(times.size());
  DiffusionState z = z0;
  z.t = 0.0;
  z.stuck = false;
  std::size_t next = 0;
  for (std::int64_t k = 0; k <= steps; ++k) {
    while (next < snap_at.size() && snap_at[next] == k) {
      out.push_back({z.delta, z.m, z.s});
      ++next;
    }
    if (k < steps) em_step(z, cfg.dt, sqrt_dt, cfg.eps, cfg.noise, rng);
  }
  return out;
}

ComparisonReport compare_chain_to_diffusion(
    const std::vector<std::int64_t>& n_list, const std::array<double, 3>& z0,
    double eps, double T, int trials, std::uint64_t seed) {
  if (trials < 2) throw std::invalid_argument("compare_chain_to_diffusion: trials must be >= 2");
  ComparisonReport rep;
  rep.z0 = z0;
  rep.eps = eps;
  rep.T = T;
  rep.trials = trials;
  const std::vector<double> times = {T / 4, T / 2, T};
  Rng base(seed);
  std::uint64_t stream = 0;

  for (std::int64_t n : n_list) {
    NComparison nc;
    nc.n = n;
    const double lam = std::pow(static_cast<double>(n), 0.25);

    // Companion chain marginals, rescaled.
    TripleState start;
    start.delta = std::llround(z0[0] * std::sqrt(static_cast<double>(n)));
    start.m = std::llround(z0[1] * std::pow(static_cast<double>(n), 0.75));
    start.s = std::llround(z0[2] * static_cast<double>(n));
    // chain_samples[coord][time_index] is one empirical sample.
    std::vector<std::vector<Sample>> chain_samples(3, std::vector<Sample>(times.size()));
    for (int tr = 0; tr < trials; ++tr) {
      Rng rng = base.child(stream++);
      RescaledChainPath path = rescaled_chain(n, start, eps, T, rng);
      for (std::size_t ti = 0; ti < times.size(); ++ti)
        for (int c = 0; c < 3; ++c)
          chain_samples[c][ti].values.push_back(path.value_at(times[ti], c));
    }

    // Euler-Maruyama ensembles at two step sizes.
    DiffusionState d0;
    d0.delta = z0[0];
    d0.m = z0[1];
    d0.s = z0[2];
    for (int which = 0; which < 2; ++which) {
      IntegratorConfig cfg;
      cfg.eps = eps;
      cfg.T = T;
      cfg.dt = (which == 0) ? T / 1024.0 : 1.0 / lam;
      std::vector<std::vector<Sample>> em_samples(3, std::vector<Sample>(times.size()));
      for (int tr = 0; tr < trials; ++tr) {
        Rng rng = base.child(stream++);
        auto snaps = integrate_marginals(d0, cfg, times, rng);
        for (std::size_t ti = 0; ti < times.size(); ++ti)
          for (int c = 0; c < 3; ++c)
            em_samples[c][ti].values.push_back(snaps[ti][c]);
      }
      auto& cells = (which == 0) ? nc.vs_fine : nc.vs_coarse;
      for (std::size_t ti = 0; ti < times.size(); ++ti)
        for (int c = 0; c < 3; ++c) {
          KsCell cell;
          cell.time = times[ti];
          cell.coord = c;
          cell.report = ks_two_sample(chain_samples[c][ti], em_samples[c][ti]);
          cells.push_back(cell);
        }
    }
    rep.per_n.push_back(std::move(nc));
  }
  return rep;
}

std::string comparison_json(const ComparisonReport& r) {
  std::string out = "{\"format_version\":1,\"eps\":";
  append_f17(out, r.eps);
  out += ",\"T\":";
  append_f17(out, r.T);
  out += ",\"trials\":" + std::to_string(r.trials) + ",\"z0\":[";
  for (int i = 0; i < 3; ++i) {
    if (i) out += ',';
    append_f17(out, r.z0[static_cast<std::size_t>(i)]);
  }
  out += "],\"per_n\":[";
  bool first_n = true;
  for (const auto& nc : r.per_n) {
    if (!first_n) out += ',';
    first_n = false;
    out += "{\"n\":" + std::to_string(nc.n);
    for (int which = 0; which < 2; ++which) {
      out += (which == 0) ? ",\"vs_fine\":[" : ",\"vs_coarse\":[";
      const auto& cells = (which == 0) ? nc.vs_fine : nc.vs_coarse;
      bool first_c = true;
      for (const auto& cell : cells) {
        if (!first_c) out += ',';
        first_c = false;
        out += "{\"time\":";
        append_f17(out, cell.time);
        out += ",\"coord\":" + std::to_string(cell.coord) + ",\"ks\":";
        append_f17(out, cell.report.statistic);
        out += ",\"p\":";
        append_f17(out, cell.report.p_value);
        out += '}';
      }
      out += ']';
    }
    out += '}';
  }
  out += "]}";
  return out;
}

std::string diffusion_csv(const std::vector<DiffusionState>& path) {
  std::string out = "# format_version 1\nt,delta,m,s\n";
  for (const auto& z : path) {
    append_f17(out, z.t);
    out += ',';
    append_f17(out, z.delta);
    out += ',';
    append_f17(out, z.m);
    out += ',';
    append_f17(out, z.s);
    out += '\n';
  }
  return out;
}

}  // namespace vprof
