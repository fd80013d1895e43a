// SPDX-License-Identifier: MIT

#include "vprof/profile_law.hpp"

#include <functional>
#include <stdexcept>

namespace vprof {

BigCount count_profile(const VerticalProfile& p) {
  if (!p.valid()) throw std::invalid_argument("count_profile: invalid profile");
  const std::int64_t m0 = p.at(0);
  BigInt num = m0 * binomial(p.at(-1) + p.at(1), m0 - 1);
  for (std::int64_t i = p.ell; i <= p.r(); ++i) {
    if (i == 0) continue;
    num *= binomial(p.at(i - 1) + p.at(i + 1) - 1, p.at(i) - 1);
    if (num == 0) return num;  // a zero factor settles it
  }
  const BigInt den = BigInt(p.at(p.ell)) * BigInt(p.at(p.r()));
  BigInt q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem != 0)
    throw std::logic_error("count_profile: product form failed to divide");
  return q;
}

namespace {

// Enumerate compositions of n into positive parts, then every placement of
// the zero abscissa within each composition.
template <typename Yield>
void for_each_profile(int n, Yield&& yield) {
  std::vector<std::int64_t> parts;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      VerticalProfile p;
      p.counts = parts;
      for (std::size_t j = 0; j < parts.size(); ++j) {
        p.ell = -static_cast<int>(j);
        yield(p);
      }
      return;
    }
    for (int part = 1; part <= rest; ++part) {
      parts.push_back(part);
      rec(rest - part);
      parts.pop_back();
    }
  };
  rec(n);
}

}  // namespace

ProfileDistribution profile_distribution(int n, int cap) {
  if (n < 1) throw std::invalid_argument("profile_distribution: n must be >= 1");
  if (n > cap)
    throw std::invalid_argument(
        "profile_distribution: n exceeds the cap (" + std::to_string(cap) +
        ")");
  ProfileDistribution d;
  d.n = n;
  d.total = 0;
  for_each_profile(n, [&](const VerticalProfile& p) {
    BigCount c = count_profile(p);
    d.total += c;
    d.weight.emplace(p, std::move(c));
  });
  return d;
}

std::string distribution_json(const ProfileDistribution& d) {
  std::string out = "{\"format_version\":1,\"n\":" + std::to_string(d.n) +
                    ",\"total\":\"" + d.total.get_str() + "\",\"profiles\":{";
  bool first = true;
  for (const auto& [p, c] : d.weight) {
    if (!first) out += ',';
    first = false;
    out += '"';
    out += profile_key(p);
    out += "\":\"";
    out += c.get_str();
    out += '"';
  }
  out += "}}";
  return out;
}

PathLaw conditional_path_law(int n, const BoundaryCondition& bc) {
  return conditional_path_law(profile_distribution(n), bc);
}

PathLaw conditional_path_law(const ProfileDistribution& d,
                             const BoundaryCondition& bc) {
  PathLaw law;
  law.k1 = bc.k1;
  law.k2 = bc.k2;
  if (!bc.well_formed())
    throw std::invalid_argument("conditional_path_law: malformed boundary");
  if (bc.z2.s < bc.z1.s) return law;  // S is nondecreasing: empty law
  std::map<std::vector<std::int64_t>, BigCount> bucket;
  BigCount total = 0;
  for (const auto& [p, w] : d.weight) {
    if (w == 0) continue;
    const TriplePath tp = triple(p, bc.k1, bc.k2);
    const std::size_t last = tp.size() - 1;
    if (TripleValue{tp.delta[0], tp.m[0], tp.s[0]} != bc.z1) continue;
    if (TripleValue{tp.delta[last], tp.m[last], tp.s[last]} != bc.z2) continue;
    std::vector<std::int64_t> key;
    key.reserve(3 * tp.size());
    for (std::size_t k = 0; k < tp.size(); ++k) {
      key.push_back(tp.delta[k]);
      key.push_back(tp.m[k]);
      key.push_back(tp.s[k]);
    }
    bucket[key] += w;
    total += w;
  }
  if (total == 0) return law;
  for (auto& [key, w] : bucket) {
    BigRat pr(w, total);
    pr.canonicalize();
    law.prob.emplace(key, std::move(pr));
  }
  return law;
}

}  // namespace vprof
