// SPDX-License-Identifier: MIT
//
// The acceptance gate: twelve numbered checks covering the exact
// combinatorics, the companion-chain equivalence, the generating-function
// identities, the moment asymptotics, the diffusion limit, and the
// large-scale sampler.  Every tolerance, seed, grid, and calibration band
// is pinned in verify.cpp; a criterion either passes against those pinned
// values or fails loudly.  kFull runs the gate at contract scale, kFast is
// a reduced profile of the same checks for quick iteration.

#pragma once

#include <string>
#include <vector>

namespace vprof {

enum class Level { kFast, kFull };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;  // fitted constants, p-values, counts
};

inline constexpr int kCriterionCount = 12;

// Runs one criterion (1-based id); throws std::invalid_argument on a bad id.
// Criteria never throw on mere failure: a violated check returns pass=false
// with the offending values in `detail`.
CriterionResult run_criterion(int id, Level level);

// Criterion ids for a named suite: "formula" {1,2,6}, "markov" {3,4,5},
// "series" {7,8}, "moments" {9,10}, "diffusion" {11,12}, or "all".
std::vector<int> suite_criteria(const std::string& suite);

std::string results_json(const std::vector<CriterionResult>& rs);

}  // namespace vprof
