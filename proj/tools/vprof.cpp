// SPDX-License-Identifier: MIT
//
// vprof: command-line surface for the vertical-profile laboratory.
//
//   sample-profile   stream a uniform tree's profile (raw or rescaled CSV)
//   count            exact tree counts: one profile, or the whole law at n
//   moments          exact displacement moments over uniform trees
//   companion        simulate the companion chain (raw or rescaled CSV)
//   sde              integrate the limiting diffusion (CSV path)
//   verify           run acceptance suites; exit 0 iff all gates pass
//
// Every stochastic command requires an explicit --seed: identical flags give
// byte-identical output.  Exit codes: 0 success, 1 gate/computation failure,
// 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vprof/companion.hpp"
#include "vprof/diffusion.hpp"
#include "vprof/profile_law.hpp"
#include "vprof/sampler.hpp"
#include "vprof/series_lab.hpp"
#include "vprof/verify.hpp"

namespace {

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << payload;
}

int cmd_sample_profile(std::int64_t n, std::uint64_t seed, const std::string& out,
                       bool rescaled, const std::string& scaling) {
  const vprof::VerticalProfile p = vprof::stream_profile(n, seed);
  std::string payload;
  if (rescaled) {
    const auto kind = scaling == "density2n" ? vprof::RescaleKind::kDensityTwoN
                                             : vprof::RescaleKind::kStandard;
    payload = vprof::rescaled_csv(vprof::rescale(p, kind));
  } else {
    payload = vprof::profile_csv(p);
  }
  std::int64_t max_m = 0;
  for (const auto c : p.counts) max_m = std::max(max_m, c);
  write_output(out, payload);
  char line[128];
  std::snprintf(line, sizeof line, "width %zu max_m %lld\n", p.counts.size(),
                static_cast<long long>(max_m));
  // Keep stdout parseable when the CSV itself goes there.
  (out.empty() ? std::cerr : std::cout) << line;
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& level,
               const std::string& out) {
  const vprof::Level lv =
      level == "fast" ? vprof::Level::kFast : vprof::Level::kFull;
  std::vector<vprof::CriterionResult> results;
  bool all_pass = true;
  for (const int id : vprof::suite_criteria(suite)) {
    const vprof::CriterionResult r = vprof::run_criterion(id, lv);
    std::printf("criterion %2d %-32s %s  (%.2f s)  %s\n", r.id, r.name.c_str(),
                r.pass ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
    std::fflush(stdout);
    all_pass = all_pass && r.pass;
    results.push_back(r);
  }
  if (!out.empty()) write_output(out, vprof::results_json(results) + "\n");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vertical-profile laboratory for uniform random binary trees"};
  app.require_subcommand(1);

  // --- sample-profile
  auto* sp = app.add_subcommand("sample-profile",
                                "stream the profile of a uniform random tree");
  std::int64_t sp_n = 0;
  std::uint64_t sp_seed = 0;
  std::string sp_out, sp_scaling = "standard";
  bool sp_rescale = false;
  sp->add_option("--n", sp_n, "tree size (vertices)")
      ->required()
      ->check(CLI::Range(std::int64_t{1}, vprof::kStreamCap));
  sp->add_option("--seed", sp_seed, "RNG seed")->required();
  sp->add_option("--out", sp_out, "output CSV path (default: stdout)");
  sp->add_flag("--rescale", sp_rescale, "emit the rescaled triple instead of raw counts");
  sp->add_option("--scaling", sp_scaling, "rescaling convention")
      ->check(CLI::IsMember({"standard", "density2n"}));

  // --- count
  auto* ct = app.add_subcommand("count", "exact profile counts");
  std::string ct_profile, ct_out;
  std::int64_t ct_n = 0;
  ct->add_option("--profile", ct_profile,
                 "profile key ell:r:m_ell,...,m_r; prints its tree count");
  ct->add_option("--n", ct_n, "emit the full profile law at size n as JSON")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{vprof::kDistributionCap}));
  ct->add_option("--out", ct_out, "output path for --n (default: stdout)");

  // --- moments
  auto* mo = app.add_subcommand("moments", "exact displacement moments");
  std::int64_t mo_n = 0;
  int mo_p = 0;
  std::int64_t mo_a = 0, mo_b = 0, mo_i = 0;
  bool mo_has_ab = false, mo_has_i = false;
  std::string mo_route = "profile";
  mo->add_option("--n", mo_n, "tree size")->required()->check(CLI::Range(1, 14));
  mo->add_option("--p", mo_p, "moment order")->required()->check(CLI::Range(1, 6));
  auto* oa = mo->add_option("--a", mo_a, "left abscissa of the increment window");
  auto* ob = mo->add_option("--b", mo_b, "right abscissa (requires a < b)");
  auto* oi = mo->add_option("--i", mo_i, "single-abscissa mode: E[(Delta_i)^p]");
  mo->add_option("--route", mo_route, "independent computation route")
      ->check(CLI::IsMember({"profile", "marks"}));
  oa->needs(ob);
  ob->needs(oa);
  oi->excludes(oa)->excludes(ob);
  mo->callback([&] {
    mo_has_ab = oa->count() > 0;
    mo_has_i = oi->count() > 0;
  });

  // --- companion
  auto* co = app.add_subcommand("companion", "simulate the companion chain");
  std::int64_t co_n = 0, co_delta0 = 0, co_m0 = 0, co_s0 = 0, co_K = 1,
               co_steps = 0;
  double co_eps = 0.1, co_T = 1.0;
  std::uint64_t co_seed = 0;
  std::string co_out;
  bool co_raw = false;
  co->add_flag("--raw", co_raw, "raw integer chain (needs --K and --steps)");
  co->add_option("--n", co_n, "rescaling size parameter (rescaled mode)");
  co->add_option("--delta0", co_delta0, "initial delta (raw mode)");
  co->add_option("--m0", co_m0, "initial m");
  co->add_option("--s0", co_s0, "initial s (raw mode)");
  co->add_option("--K", co_K, "sticking level (raw mode)");
  co->add_option("--steps", co_steps, "number of transitions (raw mode)");
  co->add_option("--eps", co_eps, "sticking level as a fraction of n^{3/4}");
  co->add_option("--T", co_T, "time horizon (rescaled mode)");
  co->add_option("--seed", co_seed, "RNG seed")->required();
  co->add_option("--out", co_out, "output CSV path (default: stdout)");

  // --- sde
  auto* sd = app.add_subcommand("sde", "integrate the limiting diffusion");
  double sd_delta0 = 0.0, sd_m0 = 0.0, sd_s0 = 0.0, sd_eps = 0.01, sd_T = 1.0,
         sd_dt = 1e-3;
  std::uint64_t sd_seed = 0;
  std::string sd_out;
  sd->add_option("--delta0", sd_delta0, "initial delta");
  sd->add_option("--m0", sd_m0, "initial m")->required();
  sd->add_option("--s0", sd_s0, "initial s");
  sd->add_option("--epsilon", sd_eps, "sticking level");
  sd->add_option("--T", sd_T, "time horizon");
  sd->add_option("--dt", sd_dt, "step size");
  sd->add_option("--seed", sd_seed, "RNG seed")->required();
  sd->add_option("--out", sd_out, "output CSV path (default: stdout)");

  // --- verify
  auto* ve = app.add_subcommand("verify", "run acceptance suites");
  std::string ve_suite = "all", ve_level = "full", ve_out;
  ve->add_option("--suite", ve_suite, "criteria group")
      ->check(CLI::IsMember({"formula", "markov", "diffusion", "series",
                             "moments", "all"}));
  ve->add_option("--level", ve_level, "fast (reduced) or full (contract scale)")
      ->check(CLI::IsMember({"fast", "full"}));
  ve->add_option("--out", ve_out, "JSON summary path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help lands here with exit code 0; anything else is a usage error (2).
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (sp->parsed())
      return cmd_sample_profile(sp_n, sp_seed, sp_out, sp_rescale, sp_scaling);

    if (ct->parsed()) {
      if (ct_profile.empty() == (ct_n == 0))
        throw std::invalid_argument("count: give exactly one of --profile or --n");
      if (!ct_profile.empty()) {
        const auto p = vprof::parse_profile_key(ct_profile);
        std::cout << vprof::count_profile(p).get_str() << "\n";
      } else {
        write_output(ct_out,
                     vprof::distribution_json(vprof::profile_distribution(
                         static_cast<int>(ct_n))) +
                         "\n");
      }
      return 0;
    }

    if (mo->parsed()) {
      if (mo_has_ab == mo_has_i)
        throw std::invalid_argument("moments: give either --a/--b or --i");
      const auto route = mo_route == "marks" ? vprof::MomentRoute::kMarks
                                             : vprof::MomentRoute::kProfile;
      const vprof::BigRat r =
          mo_has_i ? vprof::delta_moment_exact(static_cast<int>(mo_n), mo_p,
                                               static_cast<int>(mo_i), route)
                   : vprof::moment_exact(static_cast<int>(mo_n), mo_p,
                                         static_cast<int>(mo_a),
                                         static_cast<int>(mo_b), route);
      std::cout << vprof::rat_str(r) << "\n";
      return 0;
    }

    if (co->parsed()) {
      if (co_raw) {
        if (co_steps <= 0 || co_m0 < co_K || co_K < 1)
          throw std::invalid_argument(
              "companion --raw needs --steps > 0 and --m0 >= --K >= 1");
        vprof::Rng rng(co_seed);
        const auto path = vprof::run_stuck(
            {co_delta0, co_m0, co_s0, vprof::ChainStatus::kAlive}, co_K,
            co_steps, rng);
        std::string csv = "# format_version 1\nt,delta,m,s\n";
        for (std::size_t k = 0; k < path.size(); ++k) {
          csv += std::to_string(k) + ',' + std::to_string(path[k].delta) + ',' +
                 std::to_string(path[k].m) + ',' + std::to_string(path[k].s) +
                 '\n';
        }
        write_output(co_out, csv);
      } else {
        if (co_n < 1) throw std::invalid_argument("companion needs --n >= 1 (or --raw)");
        if (co_m0 == 0)  // default start: m = n^{3/4} rescaled to 1
          co_m0 = static_cast<std::int64_t>(
              std::llround(std::pow(static_cast<double>(co_n), 0.75)));
        vprof::Rng rng(co_seed);
        const auto path = vprof::rescaled_chain(
            co_n, {co_delta0, co_m0, co_s0, vprof::ChainStatus::kAlive}, co_eps,
            co_T, rng);
        write_output(co_out, vprof::chain_csv(path));
      }
      return 0;
    }

    if (sd->parsed()) {
      vprof::Rng rng(sd_seed);
      vprof::DiffusionState z0;
      z0.delta = sd_delta0;
      z0.m = sd_m0;
      z0.s = sd_s0;
      vprof::IntegratorConfig cfg;
      cfg.dt = sd_dt;
      cfg.eps = sd_eps;
      cfg.T = sd_T;
      write_output(sd_out, vprof::diffusion_csv(vprof::integrate(z0, cfg, rng)));
      return 0;
    }

    if (ve->parsed()) return cmd_verify(ve_suite, ve_level, ve_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;  // no subcommand dispatched
}
