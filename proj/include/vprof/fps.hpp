// SPDX-License-Identifier: MIT
//
// Truncated formal power series over exact rationals.
//
// A series carries its truncation order N and exactly the coefficients of
// t^0..t^N; every operation states the order to which its result is exact.
// Binary operations take the minimum of the two operand orders.  All
// arithmetic is exact (GMP rationals), so equality of two series is a
// theorem about the underlying coefficients, not a numerical coincidence.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "vprof/exact.hpp"

namespace vprof {

class Fps {
 public:
  Fps() = default;
  explicit Fps(int order) : c_(static_cast<std::size_t>(order) + 1, BigRat(0)) {}

  static Fps constant(const BigRat& v, int order);
  static Fps x(int order);  // the series t, truncated at `order`

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const BigRat& at(int k) const;  // throws beyond the truncation order
  void set(int k, const BigRat& v);
  bool is_zero() const;
  // Index of the first nonzero coefficient; order()+1 for the zero series.
  int valuation() const;

  Fps truncated(int new_order) const;  // shrinks, or zero-extends marked exact

  Fps operator-() const;
  friend Fps operator+(const Fps& a, const Fps& b);
  friend Fps operator-(const Fps& a, const Fps& b);
  friend Fps operator*(const Fps& a, const Fps& b);  // O(N^2) schoolbook
  Fps& operator+=(const Fps& b) { return *this = *this + b; }
  Fps& operator-=(const Fps& b) { return *this = *this - b; }
  Fps& operator*=(const Fps& b) { return *this = *this * b; }
  friend Fps operator*(const BigRat& a, const Fps& b);
  friend bool operator==(const Fps& a, const Fps& b);  // same order and coefficients

  Fps pow(std::int64_t e) const;  // e >= 0
  // Substitute `inner` (valuation >= 1) for the variable; exact to
  // min(order(), inner.order()).
  Fps compose(const Fps& inner) const;
  Fps reciprocal() const;  // requires nonzero constant term
  // Square root with the positive branch.  Requires even valuation 2v and a
  // leading coefficient that is a square in Q; the result is exact to
  // order() - v (coefficients above that would need unknown ones of *this).
  Fps sqrt() const;

  // Least fixed point of x = rhs(x) computed by iteration to `order`; rhs
  // must be a contraction in the t-adic sense (each pass extends agreement
  // by at least one order).  Starts from the zero series.
  template <typename F>
  static Fps fixed_point(const F& rhs, int order) {
    Fps cur(order);
    for (int it = 0; it <= order + 1; ++it) {
      Fps nxt = rhs(cur).truncated(order);
      if (nxt == cur) return cur;
      cur = nxt;
    }
    throw std::runtime_error("fixed_point: no convergence; map is not a contraction");
  }

  double eval_double(double t) const;  // Horner, for numeric probes
  std::string json() const;           // ["p/q", ...] constant term first

 private:
  std::vector<BigRat> c_;  // c_[k] is the t^k coefficient
};

}  // namespace vprof
