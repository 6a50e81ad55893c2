#pragma once

/* Unit-orbit coefficient sequences.
 *
 * For a fixed seed pi in Z[g], write pi * g^k = a_k + b_k g + c_k g^2.
 * The middle coefficients satisfy b_{k+3} = b_{k+1} + b_k going forward and,
 * with bt_l := b_{-l}, the reversed recurrence bt_l = bt_{l-3} - bt_{l-1}.
 * Solving t1(m,n) = a reduces to finding the k with b_k = 0: those orbit
 * members lie in Z[1, g^2] and read off as (m, n) = (a_k, c_k).
 */

#include <vector>

#include "q3c/cubic.hpp"

namespace q3c {

struct CoeffSeq {
  long k_min = 0;
  std::vector<BigInt> b;  // b[i] = b_{k_min + i}
  const BigInt& at(long k) const { return b.at(static_cast<size_t>(k - k_min)); }
};

/* Exact b_k for k_min <= k <= k_max, by the shift recursions in both
 * directions from pi at k = 0. */
CoeffSeq coeff_seq(const CubicInt& pi, long k_min, long k_max);

struct ZeroScan {
  std::vector<long> zeros;    // ascending k with b_k = 0, |k| <= window
  bool growth = false;        // both tails look divergent (see below)
  /* Rigorous forward tail: three consecutive b_k of one strict sign force
   * that sign forever after (b_{k+3} = b_{k+1} + b_k).  true when the window
   * ends with such a run past the last forward zero. */
  bool forward_closed = false;
};

/* All zeros of b_k within |k| <= window (window >= 20).  `growth` is the
 * heuristic divergence signal: |b| strictly increasing over the last 10
 * backward steps and sign-stable strictly increasing |b| over the last 10
 * forward steps. */
ZeroScan zero_scan(const CubicInt& pi, long window = 200);

}  // namespace q3c
