#pragma once

/* Solving t1(m,n) = a over allowable coprime pairs.
 *
 * Main path: enumerate the norm classes of a (norm_solver), normalize each
 * representative to norm +a, and scan its unit orbit for members with zero
 * middle coefficient; such a member a_k + c_k g^2 is exactly a solution
 * (m, n) = (a_k, c_k).  Completeness of a class's zero list is certified by
 * the modular certificate when a suitable split prime exists; otherwise the
 * result is labeled window-heuristic.  An independent exhaustive scan,
 * brute_solve_t1, validates everything at small height.
 *
 * solve_A inverts the sextic numerator form via the x^2 + 7y^2
 * representation: y = |mn(m+n)| is read off each representation and split
 * into divisors.
 */

#include <cstdint>
#include <vector>

#include "q3c/config.hpp"
#include "q3c/mt_certify.hpp"
#include "q3c/norm_solver.hpp"
#include "q3c/pairs.hpp"

namespace q3c {

struct ThueResult {
  BigInt a;
  std::vector<ParamPair> solutions;       // ascending (m,n)
  std::string status;                     // "certified" | "window-heuristic"
  std::vector<MTCertificate> certificates;  // one per certified class
  NormClass classes;                      // representatives actually scanned
};

ThueResult solve_t1(const BigInt& a, const RunConfig& cfg = {});

/* Exhaustive oracle: every allowable pair with |m| <= H and |n| <= H and
 * t1(m,n) = a.  Integer root isolation per n; no dependence on the norm
 * machinery. */
std::vector<ParamPair> brute_solve_t1(const BigInt& a, const BigInt& H);

/* All allowable pairs with A(m,n) = k, via k = x^2 + 7y^2 and divisor
 * splitting of y = |mn(m+n)|. */
std::vector<ParamPair> solve_A(const BigInt& k);

struct ScanC1Result {
  std::uint64_t k_max = 0;
  std::uint64_t k_with_solutions = 0;          // count of k with exactly 6
  std::vector<std::uint64_t> counterexamples;  // k with |solve_A| not in {0,6}
};

/* Solution-count census of the numerator form for all k <= k_max
 * (machine-word fast path; bounds checked for k_max <= 10^7). */
ScanC1Result scan_conjecture1(std::uint64_t k_max, unsigned parallelism = 0);

}  // namespace q3c
