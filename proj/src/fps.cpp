// SPDX-License-Identifier: MIT

#include "vprof/fps.hpp"

#include <algorithm>
#include <stdexcept>

namespace vprof {

namespace {

// Exact rational square root; throws if v is not a square in Q.
BigRat rat_sqrt(const BigRat& v) {
  if (v < 0) throw std::domain_error("rat_sqrt: negative leading coefficient");
  BigInt num = v.get_num(), den = v.get_den();
  BigInt rn, rd;
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
      mpz_perfect_square_p(den.get_mpz_t()) == 0)
    throw std::domain_error("rat_sqrt: leading coefficient is not a rational square");
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  BigRat r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace

Fps Fps::constant(const BigRat& v, int order) {
  Fps f(order);
  f.c_[0] = v;
  return f;
}

Fps Fps::x(int order) {
  if (order < 1) throw std::invalid_argument("Fps::x: order must be >= 1");
  Fps f(order);
  f.c_[1] = 1;
  return f;
}

const BigRat& Fps::at(int k) const {
  if (k < 0 || k > order()) throw std::out_of_range("Fps::at: index beyond truncation order");
  return c_[static_cast<std::size_t>(k)];
}

void Fps::set(int k, const BigRat& v) {
  if (k < 0 || k > order()) throw std::out_of_range("Fps::set: index beyond truncation order");
  c_[static_cast<std::size_t>(k)] = v;
}

bool Fps::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

int Fps::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return order() + 1;
}

Fps Fps::truncated(int new_order) const {
  Fps f(new_order);
  const std::size_t keep = std::min(c_.size(), static_cast<std::size_t>(new_order) + 1);
  std::copy(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(keep), f.c_.begin());
  return f;
}

Fps Fps::operator-() const {
  Fps f = *this;
  for (auto& v : f.c_) v = -v;
  return f;
}

Fps operator+(const Fps& a, const Fps& b) {
  Fps f(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k < f.c_.size(); ++k) f.c_[k] = a.c_[k] + b.c_[k];
  return f;
}

Fps operator-(const Fps& a, const Fps& b) {
  Fps f(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k < f.c_.size(); ++k) f.c_[k] = a.c_[k] - b.c_[k];
  return f;
}

Fps operator*(const Fps& a, const Fps& b) {
  const int n = std::min(a.order(), b.order());
  Fps f(n);
  BigRat term;
  for (int i = 0; i <= n; ++i) {
    if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.c_[static_cast<std::size_t>(j)] == 0) continue;
      term = a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
      f.c_[static_cast<std::size_t>(i + j)] += term;
    }
  }
  return f;
}

Fps operator*(const BigRat& a, const Fps& b) {
  Fps f = b;
  for (auto& v : f.c_) v *= a;
  return f;
}

bool operator==(const Fps& a, const Fps& b) {
  return a.c_ == b.c_;
}

Fps Fps::pow(std::int64_t e) const {
  if (e < 0) throw std::invalid_argument("Fps::pow: negative exponent");
  Fps acc = Fps::constant(BigRat(1), order());
  Fps base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Fps Fps::compose(const Fps& inner) const {
  if (inner.order() >= 0 && inner.c_[0] != 0)
    throw std::invalid_argument("Fps::compose: inner series needs zero constant term");
  const int n = std::min(order(), inner.order());
  const Fps in = inner.truncated(n);
  Fps acc(n);
  for (int k = std::min(order(), n); k >= 0; --k) {  // Horner
    acc = acc * in;
    acc.c_[0] += c_[static_cast<std::size_t>(k)];
  }
  return acc;
}

Fps Fps::reciprocal() const {
  if (c_.empty() || c_[0] == 0)
    throw std::domain_error("Fps::reciprocal: constant term must be nonzero");
  const int n = order();
  Fps f(n);
  f.c_[0] = 1 / c_[0];
  for (int k = 1; k <= n; ++k) {
    BigRat acc(0);
    for (int i = 1; i <= k; ++i)
      acc += c_[static_cast<std::size_t>(i)] * f.c_[static_cast<std::size_t>(k - i)];
    f.c_[static_cast<std::size_t>(k)] = -acc / c_[0];
  }
  return f;
}

Fps Fps::sqrt() const {
  const int v = valuation();
  if (v > order()) return Fps(order());  // sqrt of the (truncated) zero series
  if (v % 2 != 0) throw std::domain_error("Fps::sqrt: odd valuation has no series square root");
  const int n = order() - v;  // shifted series A with A[j] = c_[v+j], exact to n
  Fps w(n);
  w.c_[0] = rat_sqrt(c_[static_cast<std::size_t>(v)]);
  const BigRat two_w0 = 2 * w.c_[0];
  for (int k = 1; k <= n; ++k) {
    BigRat acc = c_[static_cast<std::size_t>(v + k)];
    for (int i = 1; i < k; ++i)
      acc -= w.c_[static_cast<std::size_t>(i)] * w.c_[static_cast<std::size_t>(k - i)];
    w.c_[static_cast<std::size_t>(k)] = acc / two_w0;
  }
  // Shift back by t^(v/2): exact to order() - v/2.
  Fps f(order() - v / 2);
  for (int k = 0; k <= n; ++k) f.c_[static_cast<std::size_t>(k + v / 2)] = w.c_[static_cast<std::size_t>(k)];
  return f;
}

double Fps::eval_double(double t) const {
  double acc = 0.0;
  for (int k = order(); k >= 0; --k)
    acc = acc * t + c_[static_cast<std::size_t>(k)].get_d();
  return acc;
}

std::string Fps::json() const {
  std::string out = "[";
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k) out += ',';
    out += '"' + rat_str(c_[k]) + '"';
  }
  out += ']';
  return out;
}

}  // namespace vprof
