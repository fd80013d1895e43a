// SPDX-License-Identifier: MIT

#include "vprof/stats.hpp"

#include <gsl/gsl_cdf.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace vprof {

double kolmogorov_sf(double x) {
  if (x <= 0.0) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 200; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    sum += (k % 2 == 1) ? term : -term;
    if (term < 1e-18) break;
  }
  return std::min(1.0, std::max(0.0, 2.0 * sum));
}

TestReport ks_two_sample(const Sample& a, const Sample& b) {
  if (a.values.empty() || b.values.empty())
    throw std::invalid_argument("ks_two_sample: empty sample");
  std::vector<double> x = a.values, y = b.values;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const auto n1 = static_cast<std::int64_t>(x.size());
  const auto n2 = static_cast<std::int64_t>(y.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    // advance past ties in both samples together before comparing CDFs
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] <= v) ++i;
    while (j < y.size() && y[j] <= v) ++j;
    const double fa = static_cast<double>(i) / static_cast<double>(n1);
    const double fb = static_cast<double>(j) / static_cast<double>(n2);
    d = std::max(d, std::fabs(fa - fb));
  }
  TestReport r;
  r.statistic = d;
  r.n1 = n1;
  r.n2 = n2;
  const double ne = static_cast<double>(n1) * static_cast<double>(n2) /
                    static_cast<double>(n1 + n2);
  r.p_value = kolmogorov_sf(std::sqrt(ne) * d);
  return r;
}

TestReport chi_square_uniform(const std::vector<std::int64_t>& counts,
                              std::int64_t total) {
  if (counts.empty())
    throw std::invalid_argument("chi_square_uniform: no cells");
  const double expected =
      static_cast<double>(total) / static_cast<double>(counts.size());
  if (expected < 5.0)
    throw std::invalid_argument(
        "chi_square_uniform: expected count per cell below 5; merge cells");
  std::int64_t seen = 0;
  double stat = 0.0;
  for (auto c : counts) {
    seen += c;
    const double diff = static_cast<double>(c) - expected;
    stat += diff * diff / expected;
  }
  if (seen != total)
    throw std::invalid_argument("chi_square_uniform: counts do not sum to total");
  TestReport r;
  r.statistic = stat;
  r.n1 = total;
  r.n2 = static_cast<std::int64_t>(counts.size());
  const double df = static_cast<double>(counts.size() - 1);
  r.p_value = df == 0.0 ? 1.0 : gsl_cdf_chisq_Q(stat, df);
  return r;
}

std::pair<double, double> moment_estimate(const Sample& s, int p) {
  if (s.values.empty())
    throw std::invalid_argument("moment_estimate: empty sample");
  const auto n = static_cast<double>(s.values.size());
  double mean = 0.0;
  for (double v : s.values) mean += std::pow(v, p);
  mean /= n;
  if (s.values.size() == 1) return {mean, 0.0};
  double var = 0.0;
  for (double v : s.values) {
    const double d = std::pow(v, p) - mean;
    var += d * d;
  }
  var /= (n - 1.0);
  return {mean, std::sqrt(var / n)};
}

std::string report_json(const TestReport& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "{\"statistic\":%.17g,\"p_value\":%.17g,\"n1\":%lld,\"n2\":%lld}",
                r.statistic, r.p_value, static_cast<long long>(r.n1),
                static_cast<long long>(r.n2));
  return buf;
}

}  // namespace vprof
