#pragma once

/* Mignotte-Tzanakis modular certification that a ternary linear recurrence
 * has no zeros beyond a verified finite set.
 *
 * The backward sequence bt_l = b_{-l} of a seed pi satisfies
 * bt_l = bt_{l-3} - bt_{l-1}, with characteristic polynomial x^3 + x^2 - 1.
 * Pick a prime p where that cubic splits; lift its roots g_i to mod p^2 and
 * interpolate bt_l == sum_i alpha_i g_i^l (mod p^2).  With S = p - 1 (so
 * g_i^S == 1 mod p) the certificate checks, for the claimed zero set M:
 *   (i)   bt_m = 0 exactly for every m in M;
 *   (ii)  over one full window of S consecutive indices starting at
 *         min(M u {0}), bt_n == 0 (mod p) only for n in M;
 *   (iii) bt_{m+S} != 0 (mod p^2) for every m in M.
 * (ii) confines zeros to the residues of M mod S; (iii) kills each such
 * residue class beyond the known zero.  M = {} certifies "no zeros at all".
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "q3c/coeffseq.hpp"

namespace q3c {

/* Roots of x^3 + x^2 - 1 mod p^2 (one Newton lift of the mod-p roots),
 * ascending; throws domain_error "p does not split" unless there are three
 * roots mod p. */
std::vector<BigInt> hensel_roots(std::uint64_t p);

struct MTCertificate {
  std::uint64_t p = 0;
  long S = 0;
  std::vector<long> M;                     // certified zero set (l-indices)
  std::map<long, BigInt> residues_mod_p2;  // m -> bt_{m+S} mod p^2
  std::vector<BigInt> roots;               // g_i mod p^2, ascending
  std::vector<BigInt> alphas;              // alpha_i mod p^2, aligned with roots
};

struct MTOutcome {
  bool ok = false;
  MTCertificate cert;
  std::string error;  // "no consistent labeling", "condition (ii) fails at
                      // n=...", "condition (iii) fails at m=..."
};

/* Certify that the zeros of bt_l for seed pi are exactly M, using prime p
 * and period S (S = p-1 in practice).  M entries are l-space indices. */
MTOutcome mt_certify(const CubicInt& pi, const std::vector<long>& M,
                     std::uint64_t p, long S);

/* Try split primes p < prime_limit in increasing order with S = p - 1;
 * first success wins. */
MTOutcome mt_certify_auto(const CubicInt& pi, const std::vector<long>& M,
                          std::uint64_t prime_limit = 10'000);

}  // namespace q3c
