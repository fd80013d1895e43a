// SPDX-License-Identifier: MIT

#include "vprof/profile.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace vprof {

bool VerticalProfile::valid() const {
  if (counts.empty()) return false;
  if (ell > 0 || r() < 0) return false;  // root abscissa 0 must be occupied
  for (auto c : counts)
    if (c < 1) return false;
  return true;
}

VerticalProfile translate(const VerticalProfile& p) {
  VerticalProfile q = p;
  q.ell = 0;
  return q;
}

TriplePath triple(const VerticalProfile& p, std::int64_t a, std::int64_t b) {
  if (a > b) throw std::invalid_argument("triple: window with a > b");
  TriplePath tp;
  tp.a = a;
  tp.b = b;
  const auto len = static_cast<std::size_t>(b - a + 1);
  tp.delta.reserve(len);
  tp.m.reserve(len);
  tp.s.reserve(len);
  // S accumulated from the left edge of the support.
  std::int64_t s = 0;
  for (std::int64_t i = p.ell; i < a; ++i) s += p.at(i);
  for (std::int64_t i = a; i <= b; ++i) {
    const std::int64_t m = p.at(i);
    s += m;
    tp.delta.push_back(m - p.at(i - 1));
    tp.m.push_back(m);
    tp.s.push_back(s);
  }
  return tp;
}

RescaledTriple rescale(const VerticalProfile& p, RescaleKind kind) {
  if (!p.valid()) throw std::invalid_argument("rescale: invalid profile");
  const auto n = p.n();
  const double nd = static_cast<double>(n);
  const double lambda = (kind == RescaleKind::kStandard)
                            ? std::pow(nd, 0.25)
                            : std::pow(2.0 * nd, 0.25);
  RescaledTriple out;
  out.n = n;
  out.lambda = lambda;
  // Multipliers follow from requiring (delta, m, s) -> (lambda^2/n,
  // lambda/n, 1/n): for lambda = n^{1/4} this is (n^{-1/2}, n^{-3/4}, n^{-1}).
  const double cd = lambda * lambda / nd;
  const double cm = lambda / nd;
  const double cs = 1.0 / nd;
  const TriplePath tp = triple(p, p.ell, p.r());
  const auto len = tp.size();
  out.t.reserve(len);
  out.delta.reserve(len);
  out.m.reserve(len);
  out.s.reserve(len);
  for (std::size_t k = 0; k < len; ++k) {
    const double i = static_cast<double>(tp.a + static_cast<std::int64_t>(k));
    out.t.push_back(i / lambda);
    out.delta.push_back(cd * static_cast<double>(tp.delta[k]));
    out.m.push_back(cm * static_cast<double>(tp.m[k]));
    out.s.push_back(cs * static_cast<double>(tp.s[k]));
  }
  return out;
}

double RescaledTriple::value_at(double time, int coord) const {
  const std::vector<double>& v =
      coord == 0 ? delta : (coord == 1 ? m : s);
  if (t.empty()) throw std::logic_error("value_at: empty path");
  if (time <= t.front()) return v.front();
  if (time >= t.back()) return v.back();
  // grid is uniform: locate the cell directly
  const double step = t.size() > 1 ? t[1] - t[0] : 1.0;
  auto k = static_cast<std::size_t>((time - t.front()) / step);
  if (k + 1 >= t.size()) k = t.size() - 2;
  const double w = (time - t[k]) / (t[k + 1] - t[k]);
  return v[k] * (1.0 - w) + v[k + 1] * w;
}

namespace {

void append_f17(std::string& out, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

}  // namespace

std::string profile_csv(const VerticalProfile& p) {
  std::string out = "# format_version 1\ni,delta,m,s\n";
  const TriplePath tp = triple(p, p.ell, p.r());
  for (std::size_t k = 0; k < tp.size(); ++k) {
    out += std::to_string(tp.a + static_cast<std::int64_t>(k));
    out += ',';
    out += std::to_string(tp.delta[k]);
    out += ',';
    out += std::to_string(tp.m[k]);
    out += ',';
    out += std::to_string(tp.s[k]);
    out += '\n';
  }
  return out;
}

std::string rescaled_csv(const RescaledTriple& p) {
  std::string out = "# format_version 1\nt,delta,m,s\n";
  for (std::size_t k = 0; k < p.t.size(); ++k) {
    append_f17(out, p.t[k]);
    out += ',';
    append_f17(out, p.delta[k]);
    out += ',';
    append_f17(out, p.m[k]);
    out += ',';
    append_f17(out, p.s[k]);
    out += '\n';
  }
  return out;
}

std::string profile_key(const VerticalProfile& p) {
  std::string out = std::to_string(p.ell) + ":" + std::to_string(p.r()) + ":";
  for (std::size_t k = 0; k < p.counts.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(p.counts[k]);
  }
  return out;
}

VerticalProfile parse_profile_key(const std::string& key) {
  VerticalProfile p;
  std::size_t c1 = key.find(':');
  std::size_t c2 = key.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::invalid_argument("profile key must be ell:r:m_ell,...,m_r");
  p.ell = std::stoi(key.substr(0, c1));
  const int r = std::stoi(key.substr(c1 + 1, c2 - c1 - 1));
  std::size_t pos = c2 + 1;
  while (pos < key.size()) {
    std::size_t comma = key.find(',', pos);
    if (comma == std::string::npos) comma = key.size();
    p.counts.push_back(std::stoll(key.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (p.r() != r)
    throw std::invalid_argument("profile key: count list does not match r");
  if (!p.valid()) throw std::invalid_argument("profile key: invalid profile");
  return p;
}

}  // namespace vprof
