// SPDX-License-Identifier: MIT

#include "vprof/sampler.hpp"

#include <stdexcept>
#include <vector>

#include "vprof/rng.hpp"

namespace vprof {

namespace {

// Packed +-1 step word of length 2n+1 (bit set = up step / internal vertex).
struct StepWord {
  std::int64_t len = 0;
  std::vector<std::uint64_t> bits;

  bool get(std::int64_t i) const {
    return (bits[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
  }
  void set(std::int64_t i) {
    bits[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
  }
};

StepWord sample_word(std::int64_t n, Rng& rng) {
  StepWord w;
  w.len = 2 * n + 1;
  w.bits.assign(static_cast<std::size_t>((w.len + 63) / 64), 0);
  std::uint64_t ups = static_cast<std::uint64_t>(n);
  std::uint64_t remaining = static_cast<std::uint64_t>(w.len);
  for (std::int64_t i = 0; i < w.len; ++i, --remaining) {
    if (ups != 0 && rng.bernoulli(ups, remaining)) {
      w.set(i);
      --ups;
    }
  }
  return w;
}

// Index just after the first prefix minimum: the unique rotation start that
// yields a valid preorder word.
std::int64_t rotation_start(const StepWord& w) {
  std::int64_t sum = 0, min_sum = 1, argmin = 0;
  for (std::int64_t i = 0; i < w.len; ++i) {
    sum += w.get(i) ? 1 : -1;
    if (sum < min_sum) {
      min_sum = sum;
      argmin = i;
    }
  }
  return (argmin + 1) % w.len;
}

// Walk the rotated word once, calling visit(abscissa) for every internal
// vertex in preorder.  The stack holds the abscissas of pending subtrees;
// children are pushed right-then-left so the left subtree is visited first.
template <typename Visit>
void walk_profile(const StepWord& w, std::int64_t start, Visit&& visit) {
  std::vector<std::int32_t> pending;
  pending.reserve(1024);
  pending.push_back(0);
  auto consume = [&](std::int64_t i) {
    const std::int32_t x = pending.back();
    pending.pop_back();
    if (w.get(i)) {
      visit(x);
      pending.push_back(x + 1);  // right child
      pending.push_back(x - 1);  // left child (stack top: visited next)
    }
  };
  for (std::int64_t i = start; i < w.len; ++i) consume(i);
  for (std::int64_t i = 0; i < start; ++i) consume(i);
}

}  // namespace

BinaryTree sample_uniform(std::int64_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_uniform: n must be >= 1");
  if (n > kMaterializeCap)
    throw std::invalid_argument(
        "sample_uniform: n exceeds the materialization cap; "
        "use stream_profile for profiles at this scale");
  Rng rng(seed);
  const StepWord w = sample_word(n, rng);
  const std::int64_t start = rotation_start(w);

  BinaryTree t;
  t.nodes.resize(static_cast<std::size_t>(n));
  // slot = (parent index, side); parent -1 encodes the root slot
  struct Slot {
    std::int32_t parent;
    bool is_right;
  };
  std::vector<Slot> pending;
  pending.reserve(1024);
  pending.push_back(Slot{-1, false});
  std::int32_t next_index = 0;
  auto consume = [&](std::int64_t i) {
    const Slot slot = pending.back();
    pending.pop_back();
    if (!w.get(i)) return;  // external vertex: slot stays empty
    const std::int32_t v = next_index++;
    if (slot.parent < 0) {
      t.root = v;
    } else {
      auto& pn = t.nodes[static_cast<std::size_t>(slot.parent)];
      (slot.is_right ? pn.right : pn.left) = v;
    }
    pending.push_back(Slot{v, true});
    pending.push_back(Slot{v, false});
  };
  for (std::int64_t i = start; i < w.len; ++i) consume(i);
  for (std::int64_t i = 0; i < start; ++i) consume(i);
  return t;
}

VerticalProfile stream_profile(std::int64_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("stream_profile: n must be >= 1");
  if (n > kStreamCap)
    throw std::invalid_argument("stream_profile: n exceeds the streaming cap");
  Rng rng(seed);
  const StepWord w = sample_word(n, rng);
  const std::int64_t start = rotation_start(w);

  // Dense counts around abscissa 0, grown geometrically on demand.
  std::vector<std::int64_t> counts(129, 0);
  std::int64_t offset = 64;  // counts[offset + x] = vertices at abscissa x
  std::int64_t lo = 0, hi = 0;
  auto grow = [&](std::int64_t x) {
    const std::int64_t size = static_cast<std::int64_t>(counts.size());
    std::int64_t new_size = size, new_off = offset;
    while (new_off + x < 0 || new_off + x >= new_size) {
      new_size *= 2;
      new_off = offset + (new_size - size) / 2;
    }
    std::vector<std::int64_t> nc(static_cast<std::size_t>(new_size), 0);
    for (std::int64_t i = 0; i < size; ++i)
      nc[static_cast<std::size_t>(i + new_off - offset)] = counts[static_cast<std::size_t>(i)];
    counts.swap(nc);
    offset = new_off;
  };
  walk_profile(w, start, [&](std::int32_t x) {
    if (offset + x < 0 ||
        offset + x >= static_cast<std::int64_t>(counts.size()))
      grow(x);
    ++counts[static_cast<std::size_t>(offset + x)];
    if (x < lo) lo = x;
    if (x > hi) hi = x;
  });

  VerticalProfile p;
  p.ell = static_cast<int>(lo);
  p.counts.assign(counts.begin() + static_cast<std::ptrdiff_t>(offset + lo),
                  counts.begin() + static_cast<std::ptrdiff_t>(offset + hi + 1));
  return p;
}

}  // namespace vprof
