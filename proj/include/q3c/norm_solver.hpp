#pragma once

/* Enumeration of elements of Z[g] with a prescribed norm, up to units.
 *
 * Two interchangeable strategies:
 *
 *  - elements_of_norm: literal box search over coefficient space, flagged
 *    "possibly incomplete" when a hit touches the box boundary.  Simple and
 *    independent, but only viable for small targets.
 *
 *  - elements_of_norm_factored: factor the target, split each prime in Z[g]
 *    (roots of x^3 - x - 1 mod q; short-vector reduction of the ideal
 *    lattice gives a generator), and combine prime-power generators over all
 *    exponent splittings.  Complete whenever the factorization finishes;
 *    primitive representatives only.
 *
 * Representatives are canonical associates, sorted; the two strategies agree
 * on every target both can handle.
 */

#include <cstdint>
#include <vector>

#include "q3c/cubic.hpp"
#include "q3c/intmath.hpp"

namespace q3c {

struct NormClass {
  BigInt target;                        // |norm| of every representative
  std::vector<CubicInt> representatives;  // pairwise non-associate, canonical
  bool complete = true;                 // false: some class may be missing
};

/* Default box used when the caller passes box = 0:
 * max(50, ceil(4 * a^(1/3))). */
BigInt default_box(const BigInt& a);

/* Box search with the boundary-touch completeness flag. */
NormClass elements_of_norm(const BigInt& a, const BigInt& box = 0);

/* Factorization-based enumeration.  rho_budget bounds the factoring effort;
 * when it is exhausted the result has complete = false and only the classes
 * recoverable from the factored part. */
NormClass elements_of_norm_factored(const BigInt& a,
                                    std::uint64_t rho_budget = 40'000'000);

/* Distinct roots of x^3 - x - 1 mod q (q prime).  Exposed for the prime
 * splitting loops and the class checks. */
std::vector<BigInt> cubic_roots_mod(const BigInt& q);

/* Generator of the index-q sublattice {x + y g + z g^2 : x + y r + z r^2 == 0
 * (mod q)} qua principal ideal: an element of that lattice with |norm| = q.
 * Requires r to be a root of x^3 - x - 1 mod q. */
CubicInt ideal_generator(const BigInt& q, const BigInt& r);

}  // namespace q3c
