// SPDX-License-Identifier: MIT
//
// Statistical plumbing for the Monte-Carlo gates: empirical two-sample
// Kolmogorov-Smirnov, chi-square uniformity, and moment estimates with
// standard errors.  P-values use the asymptotic laws only; every gate in
// this repository draws at least 10^3 samples, where the asymptotics are
// adequate for the coarse thresholds in use (10^-3).

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace vprof {

struct Sample {
  std::vector<double> values;
};

struct TestReport {
  double statistic = 0.0;
  double p_value = 1.0;
  std::int64_t n1 = 0, n2 = 0;
};

// Survival function of the Kolmogorov law: 2 sum_{k>=1} (-1)^{k-1} e^{-2k^2 x^2}.
double kolmogorov_sf(double x);

// sup |F_a - F_b| with p-value from the asymptotic Kolmogorov law at
// effective size n1 n2 / (n1 + n2).
TestReport ks_two_sample(const Sample& a, const Sample& b);

// Chi-square against the uniform null over counts.size() cells; requires an
// expected count of at least 5 per cell.
TestReport chi_square_uniform(const std::vector<std::int64_t>& counts,
                              std::int64_t total);

// (sample mean of x^p, standard error of that mean)
std::pair<double, double> moment_estimate(const Sample& s, int p);

std::string report_json(const TestReport& r);

}  // namespace vprof
