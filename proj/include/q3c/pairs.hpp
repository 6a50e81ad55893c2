#pragma once

/* Reduced parameter pairs (m,n) and the order-6 transform beta.
 *
 * A pair is "allowable" when gcd(m,n) = 1 and m*n*(m+n) != 0.  These pairs
 * parametrize the quadratic maps x^2 + c with a rational 3-cycle via
 * s = m/n.  beta(m,n) = (-n, m+n) has order 6 and fixes the numerator form;
 * every orbit contains exactly one pair with both coordinates positive,
 * which serves as the canonical representative.
 */

#include <array>
#include <compare>
#include <string>

#include "q3c/bigint.hpp"
#include "q3c/errors.hpp"

namespace q3c {

bool allowable(const BigInt& m, const BigInt& n);

struct ParamPair {
  BigInt m, n;

  /* Rejects non-coprime or degenerate input rather than silently reducing:
   * dividing out a common factor changes the denominator form. */
  ParamPair(BigInt m_, BigInt n_);

  /* Explicit strong_ordering: mpz_class has no <=>, so synthesis must fall
   * back to its == and <. */
  std::strong_ordering operator<=>(const ParamPair&) const = default;
  std::string str() const { return to_dec(m) + "," + to_dec(n); }
};

/* Explicit reduction helper for callers holding an unreduced fraction. */
ParamPair reduce_pair(const BigInt& m, const BigInt& n);

ParamPair beta(const ParamPair& p);

/* The six iterates p, beta(p), ..., beta^5(p), in iteration order. */
std::array<ParamPair, 6> beta_orbit(const ParamPair& p);

/* The unique orbit member with m > 0 and n > 0. */
ParamPair canonical_pair(const ParamPair& p);

}  // namespace q3c
