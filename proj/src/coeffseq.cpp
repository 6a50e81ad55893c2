#include "q3c/coeffseq.hpp"

#include <algorithm>

#include "q3c/errors.hpp"

namespace q3c {

CoeffSeq coeff_seq(const CubicInt& pi, long k_min, long k_max) {
  require(k_min <= k_max, "empty coefficient range");
  require(!pi.is_zero(), "zero element has no coefficient sequence");
  CoeffSeq seq;
  seq.k_min = k_min;
  seq.b.reserve(static_cast<size_t>(k_max - k_min + 1));
  CubicInt cur = pi;
  // Walk to pi * g^{k_min}, then step forward collecting the g-coefficient.
  if (k_min >= 0)
    for (long i = 0; i < k_min; ++i) cur = mul_g(cur);
  else
    for (long i = 0; i < -k_min; ++i) cur = mul_g_inv(cur);
  for (long k = k_min; k <= k_max; ++k) {
    seq.b.push_back(cur.b);
    cur = mul_g(cur);
  }
  // Recurrence check: b_{k+3} = b_{k+1} + b_k.
  for (size_t i = 0; i + 3 < seq.b.size(); ++i)
    invariant(seq.b[i + 3] == seq.b[i + 1] + seq.b[i],
              "coefficient recurrence violated");
  return seq;
}

ZeroScan zero_scan(const CubicInt& pi, long window) {
  require(window >= 20, "scan window too small");
  ZeroScan out;
  CoeffSeq seq = coeff_seq(pi, -window, window);
  for (long k = -window; k <= window; ++k)
    if (seq.at(k) == 0) out.zeros.push_back(k);
  // Forward closure: three consecutive entries of one strict sign at the top
  // of the window force that sign for every later k, because
  // b_{k+3} = b_{k+1} + b_k preserves a common strict sign.
  int s0 = sgn(seq.at(window - 2));
  int s1 = sgn(seq.at(window - 1));
  int s2 = sgn(seq.at(window));
  out.forward_closed = (s0 != 0 && s0 == s1 && s1 == s2);
  // Divergence heuristic: the backward tail's dominant characteristic roots
  // are a complex pair, so magnitudes oscillate; compare maxima of 5-step
  // blocks (the envelope doubles per block) instead of single steps.
  auto block_max = [&](long lo) {
    BigInt mx = 0;
    for (long k = lo; k < lo + 5; ++k) mx = std::max(mx, q3c::abs(seq.at(k)));
    return mx;
  };
  bool back_grows = block_max(-window) > block_max(-window + 5) &&
                    block_max(-window + 5) > block_max(-window + 10);
  bool fwd_grows = out.forward_closed &&
                   block_max(window - 4) > block_max(window - 9) &&
                   block_max(window - 9) > block_max(window - 14);
  out.growth = back_grows && fwd_grows;
  return out;
}

}  // namespace q3c
