// SPDX-License-Identifier: MIT

#include "vprof/companion.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace vprof {

BigRat increment_prob(std::int64_t m, std::int64_t d) {
  if (m < 1) throw std::invalid_argument("increment_prob: m must be >= 1");
  if (d < -m) return BigRat(0);
  BigRat r(binomial(d + 2 * m - 1, m - 1));
  return r * pow2(-(d + 2 * m));
}

BigRat increment_tail(std::int64_t m, std::int64_t d) {
  if (m < 1) throw std::invalid_argument("increment_tail: m must be >= 1");
  if (d < -m) return BigRat(1);
  const std::int64_t J = d + 2 * m;  // flips revealed so far
  BigInt below = 0;                  // #flip words with at most m-1 heads
  for (std::int64_t k = 0; k < m; ++k) below += binomial(J, k);
  return BigRat(below) * pow2(-J);
}

BigRat StepPMF::total() const {
  BigRat t = tail;
  for (const auto& q : p) t += q;
  return t;
}

StepPMF step_pmf(std::int64_t delta, std::int64_t m, int tail_bits) {
  if (m < 1) throw std::invalid_argument("step_pmf: m must be >= 1 (the chain is killed at m <= 0)");
  StepPMF out;
  out.delta = delta;
  out.m = m;
  out.d_min = -m;
  const BigRat threshold = pow2(-tail_bits);
  std::int64_t d = -m;
  BigRat mass(0);
  for (;;) {
    out.p.push_back(increment_prob(m, d));
    mass += out.p.back();
    if (BigRat(1) - mass < threshold) break;
    ++d;
  }
  out.d_max = d;
  out.tail = increment_tail(m, d);  // closed form, independently of `mass`
  return out;
}

namespace {

constexpr std::int64_t kSmallMRoute = 64;  // inverse-CDF below, flip blocks above

// Lazy dyadic inverse-CDF sampler for the centred increment at small m.
// CDF tables are cached per m and extended on demand, so draws are exact:
// random bits are appended until the bracket [u/2^q, (u+1)/2^q) lies inside
// a single CDF cell.
class NbSampler {
 public:
  std::int64_t sample(std::int64_t m, Rng& rng) {
    Table& tb = table(m);
    BigInt u(rng.next());
    long qbits = 64;
    for (;;) {
      // smallest j with cdf[j] > u / 2^q
      std::size_t lo = 0, hi = tb.cdf.size();
      while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (cmp_dyadic(tb.cdf[mid], u, qbits) > 0)
          hi = mid;
        else
          lo = mid + 1;
      }
      if (lo == tb.cdf.size()) {
        tb.extend(m);  // u beyond the table: materialize more outcomes
        continue;
      }
      BigInt u_hi = u + 1;
      if (cmp_dyadic(tb.cdf[lo], u_hi, qbits) >= 0)
        return -m + static_cast<std::int64_t>(lo);
      u <<= 64;  // ambiguous: reveal 64 more bits
      u |= BigInt(rng.next());
      qbits += 64;
    }
  }

 private:
  struct Table {
    std::vector<BigRat> cdf;  // cdf[j] = P(d <= -m + j)
    void extend(std::int64_t m) {
      const auto d = -m + static_cast<std::int64_t>(cdf.size());
      const BigRat prev = cdf.empty() ? BigRat(0) : cdf.back();
      cdf.push_back(prev + increment_prob(m, d));
    }
  };

  // sign of (q - u/2^qbits)
  static int cmp_dyadic(const BigRat& q, const BigInt& u, long qbits) {
    BigInt lhs = q.get_num();
    mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(),
                 static_cast<unsigned long>(qbits));
    BigInt rhs = u * q.get_den();
    return mpz_cmp(lhs.get_mpz_t(), rhs.get_mpz_t());
  }

  Table& table(std::int64_t m) {
    Table& tb = tables_[m];
    if (tb.cdf.empty()) {
      const BigRat stop = BigRat(1) - pow2(-128);
      tb.extend(m);
      while (tb.cdf.back() < stop) tb.extend(m);
    }
    return tb;
  }

  std::unordered_map<std::int64_t, Table> tables_;
};

std::int64_t sample_increment(std::int64_t m, Rng& rng) {
  if (m > kSmallMRoute)
    return static_cast<std::int64_t>(rng.flips_until_heads(
               static_cast<std::uint64_t>(m))) -
           2 * m;
  thread_local NbSampler sampler;
  return sampler.sample(m, rng);
}

}  // namespace

TripleState step(const TripleState& z, Rng& rng) {
  if (z.status != ChainStatus::kAlive) return z;
  if (z.m <= 0) {
    TripleState dead = z;
    dead.status = ChainStatus::kKilled;
    return dead;
  }
  const std::int64_t d = sample_increment(z.m, rng);
  TripleState nz;
  nz.delta = z.delta + d;
  nz.m = z.m + nz.delta;
  nz.s = z.s + nz.m;
  nz.status = nz.m <= 0 ? ChainStatus::kKilled : ChainStatus::kAlive;
  return nz;
}

std::vector<TripleState> run_stuck(const TripleState& z0, std::int64_t K,
                                   std::int64_t steps, Rng& rng) {
  if (K < 1) throw std::invalid_argument("run_stuck: K must be >= 1");
  if (z0.m < K) throw std::invalid_argument("run_stuck: z0.m below the sticking level");
  std::vector<TripleState> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  out.push_back(z0);
  TripleState cur = z0;
  bool frozen = false;
  for (std::int64_t k = 0; k < steps; ++k) {
    if (!frozen) {
      TripleState cand = step(cur, rng);
      if (cand.m < K) {
        // freeze at the last state with m >= K
        cur.status = ChainStatus::kStuck;
        frozen = true;
      } else {
        cur = cand;
      }
    }
    out.push_back(cur);
  }
  return out;
}

RescaledChainPath rescaled_chain(std::int64_t n, const TripleState& z0,
                                 double eps, double T, Rng& rng) {
  if (n < 1) throw std::invalid_argument("rescaled_chain: n must be >= 1");
  const double nd = static_cast<double>(n);
  const double lambda = std::pow(nd, 0.25);
  const auto K =
      static_cast<std::int64_t>(std::ceil(eps * std::pow(nd, 0.75) - 1e-9));
  if (K < 1)
    throw std::invalid_argument("rescaled_chain: eps n^{3/4} rounds below 1");
  if (z0.m < K)
    throw std::invalid_argument(
        "rescaled_chain: start has m below the sticking level eps n^{3/4}");
  const auto steps = static_cast<std::int64_t>(std::floor(T * lambda + 1e-9)) + 1;
  const auto states = run_stuck(z0, K, steps, rng);

  RescaledChainPath path;
  path.n = n;
  path.T = T;
  const double cd = 1.0 / std::sqrt(nd);
  const double cm = 1.0 / std::pow(nd, 0.75);
  const double cs = 1.0 / nd;
  path.t.reserve(states.size());
  path.delta.reserve(states.size());
  path.m.reserve(states.size());
  path.s.reserve(states.size());
  path.raw = states;
  for (std::size_t k = 0; k < states.size(); ++k) {
    path.t.push_back(static_cast<double>(k) / lambda);
    path.delta.push_back(cd * static_cast<double>(states[k].delta));
    path.m.push_back(cm * static_cast<double>(states[k].m));
    path.s.push_back(cs * static_cast<double>(states[k].s));
  }
  return path;
}

double RescaledChainPath::value_at(double time, int coord) const {
  const std::vector<double>& v = coord == 0 ? delta : (coord == 1 ? m : s);
  if (t.empty()) throw std::logic_error("value_at: empty path");
  if (time <= t.front()) return v.front();
  if (time >= t.back()) return v.back();
  const double spacing = t.size() > 1 ? t[1] - t[0] : 1.0;
  auto k = static_cast<std::size_t>((time - t.front()) / spacing + 1e-12);
  if (k >= t.size()) k = t.size() - 1;
  return v[k];
}

ConditionedLaw conditional_path_law_dp(std::int64_t k1, std::int64_t k2,
                                       const TripleValue& z1,
                                       const TripleValue& z2,
                                       std::int64_t m_cap) {
  if (k1 >= k2)
    throw std::invalid_argument("conditional_path_law_dp: need k1 < k2");
  if (z1.m < 1 || z2.m < 1)
    throw std::invalid_argument("conditional_path_law_dp: endpoint m must be >= 1");
  ConditionedLaw out;
  out.law.k1 = k1;
  out.law.k2 = k2;
  out.exact_certificate = m_cap >= z2.s;

  std::map<std::vector<std::int64_t>, BigRat> weights;
  BigRat total(0);
  std::vector<std::int64_t> key{z1.delta, z1.m, z1.s};
  const std::int64_t horizon = k2 - k1;

  // DFS over alive trajectories; m' determines the increment d = m' - m - delta
  // via delta' = m' - m.
  std::function<void(std::int64_t, const TripleValue&, const BigRat&)> dfs =
      [&](std::int64_t j, const TripleValue& cur, const BigRat& w) {
        if (j == horizon) {
          if (cur == z2) {
            weights[key] += w;
            total += w;
          }
          return;
        }
        const std::int64_t remaining_after = horizon - j - 1;
        // each later state contributes at least 1 to s
        const std::int64_t m_hi =
            std::min(m_cap, z2.s - cur.s - remaining_after);
        for (std::int64_t m2 = 1; m2 <= m_hi; ++m2) {
          const std::int64_t d = m2 - cur.m - cur.delta;
          if (d < -cur.m) continue;
          BigRat w2 = w * increment_prob(cur.m, d);
          TripleValue nxt{m2 - cur.m, m2, cur.s + m2};
          key.push_back(nxt.delta);
          key.push_back(nxt.m);
          key.push_back(nxt.s);
          dfs(j + 1, nxt, w2);
          key.resize(key.size() - 3);
        }
      };
  dfs(0, z1, BigRat(1));

  if (total == 0) return out;  // unreachable endpoint: empty law
  for (auto& [k, w] : weights) {
    BigRat pr = w / total;
    pr.canonicalize();
    out.law.prob.emplace(k, std::move(pr));
  }
  return out;
}

std::string chain_csv(const RescaledChainPath& path) {
  std::string out = "# format_version 1\nt,delta,m,s\n";
  char buf[256];
  for (std::size_t k = 0; k < path.t.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", path.t[k],
                  path.delta[k], path.m[k], path.s[k]);
    out += buf;
  }
  return out;
}

}  // namespace vprof
