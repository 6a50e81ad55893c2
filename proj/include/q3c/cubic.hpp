#pragma once

/* Exact arithmetic in Z[g] where g^3 = g + 1 (the ring of integers of the
 * real cubic field of discriminant -23; class number 1).  Elements are
 * a + b*g + c*g^2.  The unit group is {+-g^k}; g is a fundamental unit of
 * norm 1.  The inverse unit is g^-1 = g^2 - 1.
 */

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "q3c/bigint.hpp"

namespace q3c {

struct CubicInt {
  BigInt a, b, c;  // a + b*g + c*g^2

  CubicInt() : a(0), b(0), c(0) {}
  CubicInt(BigInt a_, BigInt b_, BigInt c_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

  bool operator==(const CubicInt&) const = default;
  /* strong_ordering so synthesis may fall back to mpz_class == and <. */
  std::strong_ordering operator<=>(const CubicInt&) const = default;
  bool is_zero() const { return a == 0 && b == 0 && c == 0; }
  std::string str() const;  // "[a,b,c]"
};

CubicInt add(const CubicInt& u, const CubicInt& v);
CubicInt sub(const CubicInt& u, const CubicInt& v);
CubicInt neg(const CubicInt& u);

/* Product reduced via g^3 = 1 + g, g^4 = g + g^2. */
CubicInt mul(const CubicInt& u, const CubicInt& v);

/* Multiplication by g is the coefficient shift (a,b,c) -> (c, a+c, b);
 * by g^-1 the inverse shift (a,b,c) -> (b-a, c, a). */
CubicInt mul_g(const CubicInt& u);
CubicInt mul_g_inv(const CubicInt& u);

/* g^k for any sign of k. */
CubicInt g_pow(long k);

/* Determinant of multiplication by u in the basis {1, g, g^2}:
 * N(a,b,c) = a^3 + b^3 + c^3 + 2a^2c + ac^2 - ab^2 - 3abc - bc^2.
 * N(m + n g^2) = t1(m,n), N(m - n g) = t2(m,n),
 * N(m - n(g - g^2)) = t3(m,n). */
BigInt norm(const CubicInt& u);

/* w with v*w = u when u/v lies in Z[g]; nothing otherwise.  Solved by
 * Cramer's rule on the multiplication matrix of v (det = N(v)). */
std::optional<CubicInt> divide_exact(const CubicInt& u, const CubicInt& v);

struct AssocResult {
  bool ok = false;
  long k = 0;   // u = sign * g^k * v when ok
  int sign = 0;
};

/* Unit-equivalence test: u = +-g^k v.  Divides exactly, then walks the unit
 * exponent both ways within |k| <= K_assoc.  Throws domain_error
 * "exponent window exceeded" when the quotient is a unit that does not
 * resolve inside the window. */
AssocResult is_associate(const CubicInt& u, const CubicInt& v,
                         long K_assoc = 400);

/* The associate +-g^k u minimizing (|a|,|b|,|c|, sign-key) lexicographically;
 * deterministic class representative. */
CubicInt canonical_associate(const CubicInt& u, long K_assoc = 400);

}  // namespace q3c
