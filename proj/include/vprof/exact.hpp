// SPDX-License-Identifier: MIT
//
// Thin exact-arithmetic layer over GMP's C++ bindings.  Everything that is
// verified as an identity in this repository (profile counts, transition
// kernels, conditioned path laws, power series) runs on BigInt/BigRat; no
// floating point enters those code paths.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vprof {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Binomial coefficient with the convention C(a, b) = 0 when b > a or either
// argument is negative.  Arguments are signed on purpose: several formulas
// feed boundary values like a = m_prev + m_next - 1 that can reach -1.
inline BigInt binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return r;
}

// n-th Catalan number C(2n, n)/(n+1); the division is exact.
inline BigInt catalan(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("catalan: negative index");
  BigInt c = binomial(2 * n, n);
  BigInt r;
  mpz_divexact_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n) + 1);
  return r;
}

// 2^e as an exact rational; e may be negative.
inline BigRat pow2(std::int64_t e) {
  BigRat r(1);
  if (e >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(),
                 static_cast<unsigned long>(e));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(),
                 static_cast<unsigned long>(-e));
  }
  return r;
}

inline BigInt int_pow(BigInt base, std::uint64_t e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

inline BigRat rat_pow(const BigRat& base, std::uint64_t e) {
  BigRat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(),
             static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(),
             static_cast<unsigned long>(e));
  return r;
}

// "p/q" (or just "p" for integers): the serialization used in JSON dumps.
inline std::string rat_str(const BigRat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace vprof
