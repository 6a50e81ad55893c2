#pragma once

/* Shared number-theoretic utilities: primality, factorization, Legendre
 * symbols, quadratic-form representations, multiplicative orders.
 *
 * Primality is deterministic Miller-Rabin below 2^64 and probabilistic
 * (GMP's Baillie-PSW + Miller-Rabin rounds) above.  Factorization is trial
 * division followed by budgeted Pollard-Brent rho; callers must inspect
 * `complete` and never pretend an unfactored cofactor is prime.
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "q3c/bigint.hpp"

namespace q3c {

bool is_prime_u64(std::uint64_t n);
bool is_probable_prime(const BigInt& n);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m);

/* Ascending primes <= limit. */
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

struct Factorization {
  std::vector<std::pair<BigInt, unsigned>> factors;  // ascending primes
  BigInt cofactor = 1;  // 1 when fully factored; composite remainder otherwise
  bool complete = true;
};

/* Trial division to `trial_limit`, then Pollard-Brent rho with an iteration
 * budget.  On budget exhaustion the remaining composite part is reported in
 * `cofactor` with complete=false. */
Factorization factorize(const BigInt& n, std::uint64_t rho_budget = 40'000'000,
                        std::uint32_t trial_limit = 1'000'000);

/* Legendre symbol (a|p); requires p an odd prime. */
int legendre(const BigInt& a, const BigInt& p);

/* All k = x^2 + D*y^2 with x >= 0, y >= 0, found by walking
 * y <= sqrt(k/D) and testing k - D*y^2 for squareness.  Sorted by y. */
std::vector<std::pair<BigInt, BigInt>> represent_x2_Dy2(const BigInt& k,
                                                        const BigInt& D);

/* Multiplicative order of a mod p (p prime, p does not divide a). */
std::uint64_t mult_order_u64(std::uint64_t a, std::uint64_t p);

/* All integer roots of x^3 + p2 x^2 + p1 x + p0, ascending, by sign-change
 * bisection on the monotone pieces between the critical points. */
std::vector<BigInt> monic_cubic_roots(const BigInt& p2, const BigInt& p1,
                                      const BigInt& p0);

}  // namespace q3c
