// SPDX-License-Identifier: MIT
//
// Exactly-uniform random binary trees via the cycle lemma.
//
// A binary tree with n vertices corresponds to a complete binary tree with
// n internal and n+1 external vertices, whose preorder word has n up steps
// (+1, internal) and n+1 down steps (-1, external).  Among the 2n+1 cyclic
// rotations of any arrangement of these steps exactly one is a valid
// preorder word (all proper prefix sums nonnegative, total -1), namely the
// rotation starting right after the first position where the prefix sum
// attains its minimum.  Sampling a uniform arrangement and rotating is
// therefore rejection-free and exactly uniform over the Cat(n) trees.
//
// The arrangement is drawn sequentially: at each position the probability
// of an up step is (remaining ups)/(remaining steps), realized by an exact
// integer Bernoulli draw.  Both entry points below consume the generator
// identically, so for equal (n, seed) the streamed profile equals the
// profile of the materialized tree byte for byte.

#pragma once

#include <cstdint>

#include "vprof/profile.hpp"
#include "vprof/tree.hpp"

namespace vprof {

inline constexpr std::int64_t kMaterializeCap = 10'000'000;
inline constexpr std::int64_t kStreamCap = 100'000'000;

// Uniform tree on n vertices, deterministic in (n, seed).  Refuses
// n > kMaterializeCap (use stream_profile for profiles at that scale).
BinaryTree sample_uniform(std::int64_t n, std::uint64_t seed);

// Profile of sample_uniform(n, seed) computed in a single pass over the
// step word: a stack of pending abscissas replaces the tree, so memory is
// O(depth + support width) beyond the packed word itself.
VerticalProfile stream_profile(std::int64_t n, std::uint64_t seed);

}  // namespace vprof
