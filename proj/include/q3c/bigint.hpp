#pragma once

/* Exact integer / rational arithmetic.
 *
 * BigInt and BigRat are GMP's C++ classes.  Everything downstream treats them
 * as opaque exact types; no floating point appears anywhere in the library.
 * Serialization is decimal strings, rationals as "num/den" with den > 0.
 */

#include <gmpxx.h>

#include <string>

#include "q3c/errors.hpp"

namespace q3c {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline std::string to_dec(const BigInt& v) { return v.get_str(); }

/* "num/den" with den > 0, gcd(num,den) = 1; integers render as "v/1". */
inline std::string to_dec(const BigRat& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline BigInt big_from(const std::string& s) {
  return BigInt(s);
}

/* num/den reduced to lowest terms with positive denominator. */
inline BigRat make_rat(const BigInt& num, const BigInt& den) {
  require(den != 0, "rational with zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline BigInt abs(const BigInt& a) {
  BigInt r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline int sign(const BigInt& a) { return sgn(a); }

inline BigInt pow_ui(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/* Exact quotient; error if b does not divide a. */
inline BigInt divexact(const BigInt& a, const BigInt& b) {
  require(b != 0, "division by zero");
  invariant(a % b == 0, "divexact: not divisible");
  BigInt r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/* floor(sqrt(a)); error on negative input. */
inline BigInt isqrt(const BigInt& a) {
  require(a >= 0, "isqrt of negative value");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

/* Exact test via integer square root and re-multiplication. */
inline bool is_perfect_square(const BigInt& a, BigInt* root = nullptr) {
  if (a < 0) return false;
  BigInt r = isqrt(a);
  if (r * r != a) return false;
  if (root) *root = r;
  return true;
}

inline BigInt mod_nonneg(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += q3c::abs(m);
  return r;
}

inline unsigned long bit_length(const BigInt& a) {
  return a == 0 ? 0 : mpz_sizeinbase(a.get_mpz_t(), 2);
}

inline bool fits_slong(const BigInt& a) { return a.fits_slong_p(); }

}  // namespace q3c
