// SPDX-License-Identifier: MIT
//
// Arena-indexed rooted plane binary trees: representation, exhaustive
// enumeration in a canonical order, and profile extraction.
//
// A tree on n vertices is stored as a flat node array where each node holds
// optional left/right child indices.  Enumeration recurses on the size of
// the left subtree (0..n-1), so the order is canonical and golden tests on
// it are stable.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vprof/profile.hpp"

namespace vprof {

inline constexpr std::int32_t kNoChild = -1;

struct TreeNode {
  std::int32_t left = kNoChild;
  std::int32_t right = kNoChild;
};

struct BinaryTree {
  std::vector<TreeNode> nodes;
  std::int32_t root = 0;

  std::int64_t size() const { return static_cast<std::int64_t>(nodes.size()); }
  bool valid() const;  // every non-root referenced once, acyclic, n >= 1

  // Canonical parenthesized serialization; used to identify trees in
  // frequency tables.
  std::string preorder_code() const;
};

inline constexpr int kEnumerationCap = 14;

// Calls yield once per n-vertex tree, Cat(n) trees in total.  The tree
// passed to the callback is only valid for the duration of the call (its
// node arena is reused between yields); copy it if you need to keep it.
// Throws std::invalid_argument when n < 1 or n > cap: enumerating beyond
// the cap is refused rather than attempted.
void enumerate_trees(int n, const std::function<void(const BinaryTree&)>& yield,
                     int cap = kEnumerationCap);

// Abscissa (right steps minus left steps from the root) of every vertex.
std::vector<std::int64_t> abscissas(const BinaryTree& t);

// Occupation counts by abscissa.
VerticalProfile profile(const BinaryTree& t);

}  // namespace vprof
