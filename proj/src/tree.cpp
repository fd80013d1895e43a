// SPDX-License-Identifier: MIT

#include "vprof/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace vprof {

bool BinaryTree::valid() const {
  const auto n = size();
  if (n < 1) return false;
  if (root < 0 || root >= n) return false;
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (const auto& nd : nodes) {
    for (std::int32_t c : {nd.left, nd.right}) {
      if (c == kNoChild) continue;
      if (c < 0 || c >= n) return false;
      ++indeg[static_cast<std::size_t>(c)];
    }
  }
  if (indeg[static_cast<std::size_t>(root)] != 0) return false;
  for (std::int64_t v = 0; v < n; ++v)
    if (v != root && indeg[static_cast<std::size_t>(v)] != 1) return false;
  // n vertices, n-1 child references, all reachable from the root: count a
  // DFS to rule out cycles among disconnected pieces.
  std::vector<std::int32_t> stack{root};
  std::int64_t seen = 0;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    ++seen;
    const auto& nd = nodes[static_cast<std::size_t>(v)];
    if (nd.left != kNoChild) stack.push_back(nd.left);
    if (nd.right != kNoChild) stack.push_back(nd.right);
  }
  return seen == n;
}

std::string BinaryTree::preorder_code() const {
  std::string out;
  out.reserve(nodes.size() * 2 + 2);
  // '(' left right ')' with '.' for an empty child slot.  Recursion depth is
  // bounded by the tree size; identification tables are only built at small n.
  std::function<void(std::int32_t)> rec = [&](std::int32_t v) {
    if (v == kNoChild) {
      out += '.';
      return;
    }
    out += '(';
    const auto& nd = nodes[static_cast<std::size_t>(v)];
    rec(nd.left);
    rec(nd.right);
    out += ')';
  };
  rec(root);
  return out;
}

namespace {

// Enumerate all subtree shapes with k vertices into the shared arena; yield
// receives the root index (kNoChild for the empty shape).  Nodes pushed for
// one alternative are popped before the next, so the arena never exceeds
// the total tree size.
void enumerate_rec(int k, std::vector<TreeNode>& arena,
                   const std::function<void(std::int32_t)>& yield) {
  if (k == 0) {
    yield(kNoChild);
    return;
  }
  for (int left_size = 0; left_size < k; ++left_size) {
    enumerate_rec(left_size, arena, [&](std::int32_t lroot) {
      enumerate_rec(k - 1 - left_size, arena, [&](std::int32_t rroot) {
        arena.push_back(TreeNode{lroot, rroot});
        yield(static_cast<std::int32_t>(arena.size()) - 1);
        arena.pop_back();
      });
    });
  }
}

}  // namespace

void enumerate_trees(int n, const std::function<void(const BinaryTree&)>& yield,
                     int cap) {
  if (n < 1) throw std::invalid_argument("enumerate_trees: n must be >= 1");
  if (n > cap)
    throw std::invalid_argument(
        "enumerate_trees: n exceeds the enumeration cap (" +
        std::to_string(cap) + "); an exhaustive pass at this size is refused");
  BinaryTree t;  // nodes double as the recursion arena
  t.nodes.reserve(static_cast<std::size_t>(n));
  enumerate_rec(n, t.nodes, [&](std::int32_t root) {
    t.root = root;
    yield(t);
  });
}

std::vector<std::int64_t> abscissas(const BinaryTree& t) {
  std::vector<std::int64_t> a(t.nodes.size(), 0);
  std::vector<std::pair<std::int32_t, std::int64_t>> stack;
  stack.emplace_back(t.root, 0);
  while (!stack.empty()) {
    const auto [v, x] = stack.back();
    stack.pop_back();
    a[static_cast<std::size_t>(v)] = x;
    const auto& nd = t.nodes[static_cast<std::size_t>(v)];
    if (nd.left != kNoChild) stack.emplace_back(nd.left, x - 1);
    if (nd.right != kNoChild) stack.emplace_back(nd.right, x + 1);
  }
  return a;
}

VerticalProfile profile(const BinaryTree& t) {
  const auto a = abscissas(t);
  const auto [lo_it, hi_it] = std::minmax_element(a.begin(), a.end());
  const std::int64_t lo = *lo_it, hi = *hi_it;
  VerticalProfile p;
  p.ell = static_cast<int>(lo);
  p.counts.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  for (auto x : a) ++p.counts[static_cast<std::size_t>(x - lo)];
  return p;
}

}  // namespace vprof
