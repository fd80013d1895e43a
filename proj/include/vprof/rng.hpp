// SPDX-License-Identifier: MIT
//
// Deterministic pseudo-random plumbing shared by every stochastic component.
//
// All simulation code draws through this generator instead of <random>: the
// standard library distributions are implementation-defined, and the product
// contract here is byte-for-byte reproducibility of every output given
// (input, seed).  The core is SplitMix64 (Steele/Lea/Flood), which is more
// than adequate for Monte-Carlo work at the sample sizes used in this
// repository and is trivially seedable.
//
// Seed splitting rule (documented contract): child(i) opens an independent
// stream seeded with mix64(mix64(base_seed) + GAMMA * i), GAMMA the SplitMix64
// increment.  The base seed is avalanched before the counter enters, so the
// child families of two related base seeds (consecutive integers, single-bit
// flips) share no structure: with the naive mix64(base ^ i) rule, xor by a
// small seed just permutes the counter range and two "independent" replicate
// ensembles can be identical as multisets.  Ensemble code partitions work by
// child index, so results do not depend on how many worker threads ran.

#pragma once

#include <bit>
#include <cmath>
#include <cstdint>

namespace vprof {

// SplitMix64 finalizer: full-avalanche 64-bit mix.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : base_(seed), state_(seed) {}

  // Independent stream for work item i (see the splitting rule above).
  Rng child(std::uint64_t i) const {
    return Rng(mix64(mix64(base_) + 0x9E3779B97F4A7C15ull * i));
  }

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
  }

  // Unbiased uniform integer in [0, n), n >= 1, by power-of-two rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(n - 1);
    for (;;) {
      const std::uint64_t v = next() & mask;
      if (v < n) return v;
    }
  }

  // Exact Bernoulli(num/den) for integer num <= den.
  bool bernoulli(std::uint64_t num, std::uint64_t den) {
    return below(den) < num;
  }

  // One fair bit, served from a 64-bit reservoir.
  bool bit() {
    if (nbits_ == 0) {
      bits_ = next();
      nbits_ = 64;
    }
    const bool b = bits_ & 1u;
    bits_ >>= 1;
    --nbits_;
    return b;
  }

  // Geometric(1/2) on {1, 2, ...}: the number of fair flips up to and
  // including the first head.  Uses the bit reservoir and countr_zero, so a
  // draw costs two bits on average.
  std::uint64_t geometric_half() {
    std::uint64_t g = 1;
    for (;;) {
      if (nbits_ == 0) {
        bits_ = next();
        nbits_ = 64;
      }
      const int tz = std::countr_zero(bits_);
      if (tz >= nbits_) {  // reservoir exhausted without seeing a head
        g += nbits_;
        nbits_ = 0;
        continue;
      }
      g += static_cast<std::uint64_t>(tz);
      bits_ >>= tz + 1;
      nbits_ -= tz + 1;
      return g;
    }
  }

  // Number of fair flips needed to observe m heads; equal in law to a sum of
  // m independent geometric_half() draws.  Counts whole 64-bit blocks with
  // popcount, so the cost is ~2m/64 next() calls.
  std::uint64_t flips_until_heads(std::uint64_t m) {
    std::uint64_t flips = 0;
    std::uint64_t need = m;
    for (;;) {
      std::uint64_t w = next();
      const auto c = static_cast<std::uint64_t>(std::popcount(w));
      if (c < need) {
        need -= c;
        flips += 64;
        continue;
      }
      // position (1-based) of the need-th set bit of w
      for (std::uint64_t k = 1; k < need; ++k) w &= w - 1;  // clear low heads
      flips += static_cast<std::uint64_t>(std::countr_zero(w)) + 1;
      return flips;
    }
  }

  // Uniform double in [0, 1) with 53 random mantissa bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Standard normal via the polar (Marsaglia) method, second value cached.
  double normal() {
    if (have_gauss_) {
      have_gauss_ = false;
      return gauss_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    gauss_ = v * f;
    have_gauss_ = true;
    return u * f;
  }

 private:
  std::uint64_t base_;
  std::uint64_t state_;
  std::uint64_t bits_ = 0;  // bit reservoir
  int nbits_ = 0;
  double gauss_ = 0.0;
  bool have_gauss_ = false;
};

}  // namespace vprof
