// SPDX-License-Identifier: MIT

#include "vprof/verify.hpp"

#include <sys/resource.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>

#include "vprof/companion.hpp"
#include "vprof/diffusion.hpp"
#include "vprof/exact.hpp"
#include "vprof/profile_law.hpp"
#include "vprof/sampler.hpp"
#include "vprof/series_lab.hpp"
#include "vprof/stats.hpp"
#include "vprof/tree.hpp"

namespace vprof {

namespace {

// ---------------------------------------------------------------------------
// Pinned gate parameters.  Statistical gates use fixed seeds so the binary
// is deterministic; thresholds sit far out (5 sigma, p > 1e-3) so the pass
// is a property of the code, not of the seed.  Calibration bands were
// frozen from measured values with ~25% headroom; a regression that moves a
// fitted constant past its band is a real change in the math, not noise.
// ---------------------------------------------------------------------------

constexpr std::uint64_t kSeedOneStep = 0x0ddc0ffee0001ULL;  // criterion 5
constexpr std::uint64_t kSeedUniformity = 424242;           // criterion 6 (chi-square)
constexpr std::uint64_t kSeedAgreement = 777;               // criterion 6 (two-path agreement)
constexpr std::uint64_t kSeedGate = 20260825;               // criterion 11
constexpr std::uint64_t kSeedStream = 31415926;             // criterion 12

constexpr double kChiSquarePMin = 1e-3;   // criterion 6
constexpr double kMomentSigmas = 5.0;     // criterion 5

// Calibration bands for fitted constants (criteria 8-10); see the matching
// assertions for the quantity each one bounds.
// The three fitted constants below are exact-rational computations, so the
// measured values are deterministic; the bands leave a few-fold margin so a
// regression (a wrong coefficient, a lost term) trips them while legitimate
// refactors never will.
constexpr double kGrowthBandLo = 0.05;  // measured range 0.1137..0.1256, n = 6..14
constexpr double kGrowthBandHi = 0.5;
constexpr double kC4Band = 8.0;         // measured fit 2.7439 over n = 8..12
constexpr double kC10Band = 1.0;        // measured fit 0.3934 on the n = 12 grid

struct Budget {
  // criterion 11
  int gate_reps;
  int gate_trials;
  // criterion 12
  std::int64_t stream_n;
  int stream_seeds;
};

Budget budget(Level lv) {
  if (lv == Level::kFull) return {20, 10000, 50'000'000, 20};
  return {6, 2000, 5'000'000, 5};
}

void appendf(std::string& out, const char* fmt, ...)
    __attribute__((format(printf, 2, 3)));

void appendf(std::string& out, const char* fmt, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  out += buf;
}

// --- 1: product formula vs exhaustive enumeration --------------------------

bool product_formula_vs_enumeration(Level lv, std::string& detail) {
  const int n_enum = lv == Level::kFull ? 10 : 8;
  const int n_formula = lv == Level::kFull ? 12 : 10;
  long long profiles_checked = 0;
  for (int n = 1; n <= n_enum; ++n) {
    const ProfileDistribution dist = profile_distribution(n);
    std::map<VerticalProfile, long long> freq;
    enumerate_trees(n, [&](const BinaryTree& t) { ++freq[profile(t)]; });
    for (const auto& [p, c] : freq) {
      const auto it = dist.weight.find(p);
      if (it == dist.weight.end() || it->second != static_cast<long>(c)) {
        detail = "enumerated profile disagrees with the product formula at n=" +
                 std::to_string(n) + " key " + profile_key(p);
        return false;
      }
    }
    for (const auto& [p, w] : dist.weight) {
      ++profiles_checked;
      if (w > 0 && freq.find(p) == freq.end()) {
        detail = "formula claims unrealized profile at n=" + std::to_string(n) +
                 " key " + profile_key(p);
        return false;
      }
    }
  }
  for (int n = 1; n <= n_formula; ++n) {
    if (profile_distribution(n).total != catalan(n)) {
      detail = "formula mass != Cat(n) at n=" + std::to_string(n);
      return false;
    }
  }
  appendf(detail, "enumeration match to n=%d, mass identity to n=%d, %lld profiles",
          n_enum, n_formula, profiles_checked);
  return true;
}

// --- 2: the two worked six-vertex instances ---------------------------------

bool six_vertex_profile_counts(Level, std::string& detail) {
  const VerticalProfile p1 = parse_profile_key("-2:1:1,1,3,1");
  const VerticalProfile p2 = parse_profile_key("0:4:1,1,2,1,1");
  if (count_profile(p1) != 3 || count_profile(p2) != 1) {
    detail = "closed-form counts differ from the worked instances";
    return false;
  }
  std::map<VerticalProfile, long long> freq;
  long long trees = 0;
  enumerate_trees(6, [&](const BinaryTree& t) {
    ++trees;
    ++freq[profile(t)];
  });
  if (trees != 132 || freq[p1] != 3 || freq[p2] != 1) {
    detail = "six-vertex enumeration disagrees";
    return false;
  }
  detail = "both instances confirmed against all 132 six-vertex trees";
  return true;
}

// --- 3: tree bridge law == companion chain bridge law -----------------------

bool conditioned_bridge_equivalence(Level lv, std::string& detail) {
  const int n = lv == Level::kFull ? 8 : 6;
  const ProfileDistribution dist = profile_distribution(n);

  // Every boundary condition realized on the positive side by some profile.
  std::set<std::array<std::int64_t, 8>> bcs;
  for (const auto& [p, w] : dist.weight) {
    if (w == 0) continue;
    const int r = p.r();
    if (r < 2) continue;
    const TriplePath tp = triple(p, 1, r);
    for (int k1 = 1; k1 < r; ++k1)
      for (int k2 = k1 + 1; k2 <= r; ++k2)
        bcs.insert({k1, k2, tp.delta[static_cast<std::size_t>(k1 - 1)],
                    tp.m[static_cast<std::size_t>(k1 - 1)],
                    tp.s[static_cast<std::size_t>(k1 - 1)],
                    tp.delta[static_cast<std::size_t>(k2 - 1)],
                    tp.m[static_cast<std::size_t>(k2 - 1)],
                    tp.s[static_cast<std::size_t>(k2 - 1)]});
  }
  long long checked = 0;
  for (const auto& v : bcs) {
    BoundaryCondition bc;
    bc.k1 = v[0];
    bc.k2 = v[1];
    bc.z1 = {v[2], v[3], v[4]};
    bc.z2 = {v[5], v[6], v[7]};
    const PathLaw tree_law = conditional_path_law(dist, bc);
    const ConditionedLaw chain_law =
        conditional_path_law_dp(bc.k1, bc.k2, bc.z1, bc.z2, bc.z2.s);
    if (!chain_law.exact_certificate) {
      detail = "chain bridge not certified exact";
      return false;
    }
    if (tree_law.empty() || tree_law.prob != chain_law.law.prob) {
      appendf(detail, "bridge laws differ at k1=%lld k2=%lld z1=(%lld,%lld,%lld) z2=(%lld,%lld,%lld)",
              (long long)bc.k1, (long long)bc.k2, (long long)bc.z1.delta,
              (long long)bc.z1.m, (long long)bc.z1.s, (long long)bc.z2.delta,
              (long long)bc.z2.m, (long long)bc.z2.s);
      return false;
    }
    ++checked;
  }
  appendf(detail, "n=%d: %lld boundary conditions, all bridge laws identical", n, checked);
  return true;
}

// --- 4: kernel normalization -------------------------------------------------

bool kernel_normalization(Level, std::string& detail) {
  for (std::int64_t m = 1; m <= 50; ++m) {
    const StepPMF pmf = step_pmf(0, m);
    if (pmf.total() != 1) {
      detail = "kernel mass != 1 at m=" + std::to_string(m);
      return false;
    }
  }
  detail = "table + closed-form tail is exactly 1 for m = 1..50";
  return true;
}

// --- 5: one-step moment identities -------------------------------------------

bool one_step_moments(Level lv, std::string& detail) {
  const std::int64_t draws = lv == Level::kFull ? 1'000'000 : 100'000;
  const std::vector<std::int64_t> ms =
      lv == Level::kFull ? std::vector<std::int64_t>{1, 10, 1000}
                         : std::vector<std::int64_t>{1, 10};
  for (const std::int64_t m : ms) {
    Rng rng(kSeedOneStep + static_cast<std::uint64_t>(m));
    const TripleState z0{0, m, 0, ChainStatus::kAlive};
    __int128 sx = 0, sx2 = 0;
    for (std::int64_t i = 0; i < draws; ++i) {
      const TripleState z1 = step(z0, rng);
      // Cascade structure: the centered one-step increments of (delta,m,s)
      // are all the same variable, which is the rank-one covariance claim.
      if (z1.m - z0.m != z1.delta || z1.s - z0.s != z1.m) {
        detail = "cascade structure violated at m=" + std::to_string(m);
        return false;
      }
      const std::int64_t x = z1.delta;  // delta' - delta, centered
      sx += x;
      sx2 += static_cast<__int128>(x) * x;
    }
    const double mean = static_cast<double>(sx) / static_cast<double>(draws);
    const double var =
        static_cast<double>(sx2) / static_cast<double>(draws) - mean * mean;
    // For one geometric(1/2) summand on {1,2,...}: variance 2 and fourth
    // central moment 38, so X (a sum of m of them, centered) has
    // Var X = 2m and E X^4 = 26m + 12m^2.
    const double md = static_cast<double>(m);
    const double se_mean = std::sqrt(2 * md / static_cast<double>(draws));
    const double se_var =
        std::sqrt((26 * md + 8 * md * md) / static_cast<double>(draws));
    if (std::fabs(mean) > kMomentSigmas * se_mean) {
      appendf(detail, "mean off at m=%lld: %.5f vs band %.5f", (long long)m,
              mean, kMomentSigmas * se_mean);
      return false;
    }
    if (std::fabs(var - 2 * md) > kMomentSigmas * se_var) {
      appendf(detail, "variance off at m=%lld: %.5f vs 2m=%g band %.5f",
              (long long)m, var, 2 * md, kMomentSigmas * se_var);
      return false;
    }
  }
  appendf(detail, "mean 0, variance 2m, rank-one increments at %lld draws",
          (long long)draws);
  return true;
}

// --- 6: sampler uniformity and the two-path agreement ------------------------

bool sampler_uniformity(Level lv, std::string& detail) {
  const std::int64_t per_tree = lv == Level::kFull ? 10'000 : 2'000;
  // Canonical order of the 14 four-vertex trees.
  std::vector<std::string> codes;
  enumerate_trees(4, [&](const BinaryTree& t) { codes.push_back(t.preorder_code()); });
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < codes.size(); ++i) index[codes[i]] = i;
  std::vector<std::int64_t> counts(codes.size(), 0);
  const std::int64_t draws = per_tree * static_cast<std::int64_t>(codes.size());
  for (std::int64_t i = 0; i < draws; ++i) {
    const BinaryTree t =
        sample_uniform(4, kSeedUniformity + static_cast<std::uint64_t>(i));
    ++counts[index.at(t.preorder_code())];
  }
  const TestReport chi = chi_square_uniform(counts, draws);
  if (!(chi.p_value > kChiSquarePMin)) {
    appendf(detail, "chi-square rejected uniformity: p=%.3g", chi.p_value);
    return false;
  }

  const std::vector<std::int64_t> sizes = {1,    2,    3,    5,    17,
                                           128,  1000, 4096, 9999, 10000};
  const int seeds = lv == Level::kFull ? 100 : 20;
  for (int s = 0; s < seeds; ++s) {
    const std::int64_t n = sizes[static_cast<std::size_t>(s) % sizes.size()];
    const std::uint64_t seed = kSeedAgreement + static_cast<std::uint64_t>(s);
    if (!(stream_profile(n, seed) == profile(sample_uniform(n, seed)))) {
      appendf(detail, "stream/materialized mismatch at n=%lld seed %d",
              (long long)n, s);
      return false;
    }
  }
  appendf(detail, "chi-square p=%.4f at %lld draws; %d streamed/materialized matches",
          chi.p_value, (long long)draws, seeds);
  return true;
}

// --- 7: branch generating-function oracle ------------------------------------

bool branch_series_oracle(Level lv, std::string& detail) {
  const int order = lv == Level::kFull ? 256 : 64;
  // solve_algebraic itself throws unless the B identity, the U residual and
  // W^2 = U hold exactly to `order`.
  const AlgebraicSystem sys = solve_algebraic(order);

  for (int k = 1; k <= 20; ++k)
    if (sys.T.at(k) != BigRat(catalan(k))) {
      detail = "T coefficient differs from Catalan at k=" + std::to_string(k);
      return false;
    }

  for (int i = -3; i <= 3; ++i) {
    const std::vector<BigInt> brute = brute_branches(i, 10);
    const Fps h = branch_gf(sys, i);
    for (int k = 0; k <= 10; ++k)
      if (h.at(k) != BigRat(brute[static_cast<std::size_t>(k)])) {
        detail = "branch series differs from enumeration at i=" +
                 std::to_string(i) + " k=" + std::to_string(k);
        return false;
      }
  }

  // Negative control: the y = t(T-1) variant must disagree with the counts.
  const AlgebraicSystem err = solve_algebraic(32, YConvention::kTMinusOne);
  bool control_failed_somewhere = false;
  for (int i = -3; i <= 3 && !control_failed_somewhere; ++i) {
    const std::vector<BigInt> brute = brute_branches(i, 10);
    const Fps h = branch_gf(err, i);
    for (int k = 0; k <= 10; ++k)
      if (h.at(k) != BigRat(brute[static_cast<std::size_t>(k)])) {
        control_failed_somewhere = true;
        break;
      }
  }
  if (!control_failed_somewhere ||
      branch_gf(err, 0).at(1) != BigRat(-2)) {
    detail = "the y = t(T-1) control unexpectedly matches the enumeration";
    return false;
  }

  // Zone closed forms, all zones crossed, at order 64 (exactness of an
  // algebraic-series identity at this depth is already conclusive).
  AlgebraicSystem zsys;
  zsys.order = std::min(order, 64);
  zsys.conv = sys.conv;
  zsys.T = sys.T.truncated(zsys.order);
  zsys.y = sys.y.truncated(zsys.order);
  zsys.U = sys.U.truncated(zsys.order);
  zsys.B = sys.B.truncated(zsys.order);
  zsys.W = sys.W.truncated(zsys.order);
  long long zones = 0;
  for (int q = 0; q <= 3; ++q) {
    const int a = 2, b = a + q;
    for (int x = a - 3; x <= b + 4; ++x) {
      const EdgeZoneCheck c = external_edge_gf(zsys, a, b, x);
      if (!c.equal) {
        appendf(detail, "zone identity fails at q=%d x=%d", q, x);
        return false;
      }
      ++zones;
    }
  }
  appendf(detail,
          "oracle |i|<=3 k<=10 exact; control disagrees as required; "
          "identities to order %d; %lld zone identities", order, zones);
  return true;
}

// --- 8: fork resummation and the growth constant -----------------------------

bool fork_resummation_and_growth(Level lv, std::string& detail) {
  const int order = lv == Level::kFull ? 256 : 64;
  const AlgebraicSystem sys = solve_algebraic(order);
  const ForkCheck fc = fork_second_moment(sys);
  if (!fc.equal) {
    detail = "fork sum differs from its closed form";
    return false;
  }
  double lo = fc.growth.front().second, hi = lo;
  for (const auto& [n, v] : fc.growth) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!(lo >= kGrowthBandLo && hi <= kGrowthBandHi)) {
    appendf(detail, "growth values [%.6f, %.6f] outside band [%g, %g]", lo, hi,
            kGrowthBandLo, kGrowthBandHi);
    return false;
  }
  appendf(detail, "sum = closed form to order %d; growth in [%.4f, %.4f] for n=6..14",
          order, lo, hi);
  return true;
}

// --- 9: fourth-moment bound ---------------------------------------------------

bool fourth_moment_bound(Level lv, std::string& detail) {
  const int n_max = lv == Level::kFull ? 12 : 10;
  double c4 = 0.0;
  long long cells = 0;
  for (int n = 8; n <= n_max; ++n) {
    const ProfileDistribution dist = profile_distribution(n);
    // The window constraint keeps only b - a = 1 for n <= 12.
    const double mu = 1.0 / std::pow(static_cast<double>(n), 0.25);
    for (int a = -n; a <= n; ++a) {
      // E[(Delta_b - Delta_a)^4] with b = a + 1.
      const BigRat e = moment_exact(dist, 4, a - 1, a);
      const double scaled =
          e.get_d() / (static_cast<double>(n) * static_cast<double>(n));
      c4 = std::max(c4, scaled / (mu * mu));
      ++cells;
    }
  }
  // Independent-route cross check at n = 8.
  for (const int a : {-2, 0, 1, 3}) {
    if (moment_exact(8, 4, a - 1, a, MomentRoute::kMarks) !=
        moment_exact(8, 4, a - 1, a, MomentRoute::kProfile)) {
      detail = "mark and profile moment routes disagree at n=8";
      return false;
    }
  }
  if (!(c4 > 0 && c4 <= kC4Band)) {
    appendf(detail, "fitted C4 = %.4f outside (0, %g]", c4, kC4Band);
    return false;
  }
  appendf(detail, "fitted C4 = %.4f over %lld cells (band %g), routes agree", c4,
          cells, kC4Band);
  return true;
}

// --- 10: second-moment ratio --------------------------------------------------

bool second_moment_ratio(Level, std::string& detail) {
  const int n = 12, a = 1;
  double cfit = 0.0;
  std::string ratios;
  for (int q = 1; q <= 3; ++q) {
    const BonusCheck bc = bonus_moment_check(n, 1, a, a + q);
    const double err = std::fabs(bc.ratio.get_d() - 1.0);
    const double base = bc.mu + std::pow(static_cast<double>(n), -0.125);
    cfit = std::max(cfit, err / base);
    appendf(ratios, " q=%d ratio=%.5f", q, bc.ratio.get_d());
  }
  if (!(cfit > 0 && cfit <= kC10Band)) {
    appendf(detail, "fitted C = %.4f outside (0, %g];%s", cfit, kC10Band,
            ratios.c_str());
    return false;
  }
  appendf(detail, "fitted C = %.4f (band %g);%s", cfit, kC10Band, ratios.c_str());
  return true;
}

// --- 11: diffusion-approximation directional gate -----------------------------
//
// The distance is measured against the integrator at the chain-matched step
// n^{-1/4}.  Against a much finer step the sup-CDF distance saturates at the
// sticking mass: the chain's frozen m overshoots the barrier by O(n^{-1/4})
// while a fine-step path freezes within O(dt) of it, so the two laws converge
// weakly but not in Kolmogorov-Smirnov distance, and no sample size or n
// makes that component shrink.  At matched resolution both overshoot
// distributions live on the same scale and the distance genuinely contracts.

bool scaling_limit_gate(Level lv, std::string& detail) {
  const Budget b = budget(lv);
  const double T = 1.0;
  int decreasing = 0;
  double sum_lo = 0, sum_hi = 0;
  for (int rep = 0; rep < b.gate_reps; ++rep) {
    const ComparisonReport r = compare_chain_to_diffusion(
        {256, 65536}, {0.0, 1.0, 0.0}, 0.1, T, b.gate_trials,
        kSeedGate + static_cast<std::uint64_t>(rep));
    const auto ks_at_T = [&](const NComparison& nc) {
      for (const auto& cell : nc.vs_coarse)
        if (cell.coord == 1 && std::fabs(cell.time - T) < 1e-12)
          return cell.report.statistic;
      throw std::logic_error("missing KS cell at the terminal time");
    };
    const double d_small = ks_at_T(r.per_n[0]);
    const double d_large = ks_at_T(r.per_n[1]);
    sum_lo += d_small;
    sum_hi += d_large;
    if (d_large < d_small) ++decreasing;
  }
  const int needed = (b.gate_reps * 9 + 9) / 10;  // ceil(0.9 reps)
  if (decreasing < needed) {
    appendf(detail, "KS decreased in %d/%d replicates (need %d)", decreasing,
            b.gate_reps, needed);
    return false;
  }
  appendf(detail, "KS decreased in %d/%d replicates; mean D: %.4f (n=2^8) -> %.4f (n=2^16)",
          decreasing, b.gate_reps, sum_lo / b.gate_reps, sum_hi / b.gate_reps);
  return true;
}

// --- 12: streaming sampler at scale --------------------------------------------

bool large_scale_streaming(Level lv, std::string& detail) {
  const Budget b = budget(lv);
  const double lo_band = std::pow(static_cast<double>(b.stream_n), 0.25);
  const double hi_band = 40.0 * lo_band;
  int in_band = 0;
  double worst_seconds = 0.0;
  for (int s = 0; s < b.stream_seeds; ++s) {
    const auto t0 = std::chrono::steady_clock::now();
    const VerticalProfile p =
        stream_profile(b.stream_n, kSeedStream + static_cast<std::uint64_t>(s));
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    worst_seconds = std::max(worst_seconds, secs);
    if (secs > 60.0) {
      appendf(detail, "run took %.1f s (> 60 s) at seed %d", secs, s);
      return false;
    }
    if (p.n() != b.stream_n) {
      detail = "streamed profile mass != n";
      return false;
    }
    const auto width = static_cast<double>(p.counts.size());
    if (width >= lo_band && width <= hi_band) ++in_band;
  }
  struct rusage ru{};
  getrusage(RUSAGE_SELF, &ru);
  const double rss_gb = static_cast<double>(ru.ru_maxrss) / (1024.0 * 1024.0);
  if (rss_gb > 2.0) {
    appendf(detail, "peak RSS %.2f GB exceeds 2 GB", rss_gb);
    return false;
  }
  const int needed = (b.stream_seeds * 19 + 19) / 20;  // ceil(0.95 seeds)
  if (in_band < needed) {
    appendf(detail, "support width in band for %d/%d seeds (need %d)", in_band,
            b.stream_seeds, needed);
    return false;
  }
  appendf(detail,
          "n=%lld: width in [n^1/4, 40 n^1/4] for %d/%d seeds; worst run %.1f s; peak RSS %.2f GB",
          (long long)b.stream_n, in_band, b.stream_seeds, worst_seconds, rss_gb);
  return true;
}

using CriterionFn = bool (*)(Level, std::string&);

struct CriterionSpec {
  const char* name;
  CriterionFn fn;
};

constexpr std::array<CriterionSpec, kCriterionCount> kCriteria{{
    {"product-formula-vs-enumeration", product_formula_vs_enumeration},
    {"six-vertex-profile-counts", six_vertex_profile_counts},
    {"conditioned-bridge-equivalence", conditioned_bridge_equivalence},
    {"kernel-normalization", kernel_normalization},
    {"one-step-moments", one_step_moments},
    {"sampler-uniformity", sampler_uniformity},
    {"branch-series-oracle", branch_series_oracle},
    {"fork-resummation-and-growth", fork_resummation_and_growth},
    {"fourth-moment-bound", fourth_moment_bound},
    {"second-moment-ratio", second_moment_ratio},
    {"scaling-limit-gate", scaling_limit_gate},
    {"large-scale-streaming", large_scale_streaming},
}};

}  // namespace

CriterionResult run_criterion(int id, Level level) {
  if (id < 1 || id > kCriterionCount)
    throw std::invalid_argument("run_criterion: id must be 1..12");
  const CriterionSpec& spec = kCriteria[static_cast<std::size_t>(id - 1)];
  CriterionResult res;
  res.id = id;
  res.name = spec.name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    res.pass = spec.fn(level, res.detail);
  } catch (const std::exception& e) {
    res.pass = false;
    res.detail = std::string("exception: ") + e.what();
  }
  res.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "formula") return {1, 2, 6};
  if (suite == "markov") return {3, 4, 5};
  if (suite == "series") return {7, 8};
  if (suite == "moments") return {9, 10};
  if (suite == "diffusion") return {11, 12};
  if (suite == "all") {
    std::vector<int> ids(kCriterionCount);
    for (int i = 0; i < kCriterionCount; ++i) ids[static_cast<std::size_t>(i)] = i + 1;
    return ids;
  }
  throw std::invalid_argument("unknown suite: " + suite);
}

std::string results_json(const std::vector<CriterionResult>& rs) {
  std::string out = "{\"format_version\":1,\"results\":[";
  bool first = true;
  for (const auto& r : rs) {
    if (!first) out += ',';
    first = false;
    appendf(out, "{\"id\":%d,\"name\":\"%s\",\"pass\":%s,\"seconds\":%.3f,\"detail\":\"",
            r.id, r.name.c_str(), r.pass ? "true" : "false", r.seconds);
    for (char c : r.detail) {  // minimal JSON escaping; details are ASCII
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    out += "\"}";
  }
  out += "]}";
  return out;
}

}  // namespace vprof
