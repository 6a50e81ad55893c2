#include "q3c/mt_certify.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "q3c/errors.hpp"
#include "q3c/intmath.hpp"

namespace q3c {

std::vector<BigInt> hensel_roots(std::uint64_t p) {
  require(p >= 2, "modulus must be a prime");
  std::vector<std::uint64_t> base;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t v = (mulmod_u64(mulmod_u64(x, x, p), x, p) +
                       mulmod_u64(x, x, p) + p - 1) % p;
    if (v == 0) base.push_back(x);
  }
  if (base.size() != 3) throw domain_error("p does not split");
  BigInt P2 = BigInt(p) * BigInt(p);
  std::vector<BigInt> lifted;
  for (std::uint64_t r0 : base) {
    BigInt r = r0;
    BigInt fp = mod_nonneg(3 * r * r + 2 * r, P2);
    BigInt inv;
    int ok = mpz_invert(inv.get_mpz_t(), fp.get_mpz_t(), P2.get_mpz_t());
    invariant(ok != 0, "derivative not invertible at simple root");
    BigInt val = r * r * r + r * r - 1;
    BigInt lift = mod_nonneg(r - val * inv, P2);
    invariant(mod_nonneg(lift * lift * lift + lift * lift - 1, P2) == 0,
              "Newton lift is not a root mod p^2");
    lifted.push_back(lift);
  }
  std::sort(lifted.begin(), lifted.end());
  return lifted;
}

MTOutcome mt_certify(const CubicInt& pi, const std::vector<long>& M_in,
                     std::uint64_t p, long S) {
  require(S >= 1, "period must be positive");
  MTOutcome out;
  out.cert.p = p;
  out.cert.S = S;
  out.cert.M = M_in;
  std::sort(out.cert.M.begin(), out.cert.M.end());
  const std::vector<long>& M = out.cert.M;
  require(std::adjacent_find(M.begin(), M.end()) == M.end(),
          "zero set has repeated indices");

  const BigInt P = p;
  const BigInt P2 = P * P;
  out.cert.roots = hensel_roots(p);
  for (const BigInt& g : out.cert.roots) {
    BigInt gs;
    mpz_powm(gs.get_mpz_t(), g.get_mpz_t(), BigInt(S).get_mpz_t(), P.get_mpz_t());
    require(gs == 1, "period S does not kill the roots mod p");
  }

  // Exact backward values bt_l = b_{-l} over every index the checks touch.
  long lo = 0;
  for (long m : M) lo = std::min(lo, m);
  long hi = lo + S - 1;
  if (!M.empty()) hi = std::max(hi, M.back() + S);
  hi = std::max(hi, 12L);
  CoeffSeq seq = coeff_seq(pi, -hi, -lo);
  auto bt = [&](long l) { return seq.at(-l); };

  // Interpolate bt_l == sum_i alpha_i g_i^l (mod p^2) from l = 0, 1, 2 by
  // Gaussian elimination; pivots stay invertible because the roots are
  // distinct mod p.
  std::array<std::array<BigInt, 4>, 3> mat;
  for (int l = 0; l < 3; ++l) {
    for (int i = 0; i < 3; ++i) {
      BigInt pw;
      mpz_powm_ui(pw.get_mpz_t(), out.cert.roots[static_cast<size_t>(i)].get_mpz_t(),
                  static_cast<unsigned long>(l), P2.get_mpz_t());
      mat[static_cast<size_t>(l)][static_cast<size_t>(i)] = pw;
    }
    mat[static_cast<size_t>(l)][3] = mod_nonneg(bt(l), P2);
  }
  for (size_t i = 0; i < 3; ++i) {
    size_t piv = i;
    while (piv < 3 && mat[piv][i] % P == 0) ++piv;
    invariant(piv < 3, "Vandermonde pivot vanished mod p");
    std::swap(mat[i], mat[piv]);
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), mat[i][i].get_mpz_t(), P2.get_mpz_t());
    for (auto& x : mat[i]) x = mod_nonneg(x * inv, P2);
    for (size_t r = 0; r < 3; ++r) {
      if (r == i || mat[r][i] == 0) continue;
      BigInt f = mat[r][i];
      for (size_t c = 0; c < 4; ++c) mat[r][c] = mod_nonneg(mat[r][c] - f * mat[i][c], P2);
    }
  }
  out.cert.alphas = {mat[0][3], mat[1][3], mat[2][3]};

  // Sanity: the interpolation must reproduce bt_l at ten further indices.
  for (long l = 3; l < 13; ++l) {
    BigInt acc = 0;
    for (size_t i = 0; i < 3; ++i) {
      BigInt pw;
      mpz_powm_ui(pw.get_mpz_t(), out.cert.roots[i].get_mpz_t(),
                  static_cast<unsigned long>(l), P2.get_mpz_t());
      acc += out.cert.alphas[i] * pw;
    }
    if (mod_nonneg(acc, P2) != mod_nonneg(bt(l), P2)) {
      out.error = "no consistent labeling";
      return out;
    }
  }

  // (i) claimed zeros are exact zeros.
  for (long m : M) {
    if (bt(m) != 0) {
      out.error = "condition (i) fails at m=" + std::to_string(m);
      return out;
    }
  }
  // (ii) over one full residue window, mod-p zeros only at M.
  std::set<long> mset(M.begin(), M.end());
  for (long n = lo; n < lo + S; ++n) {
    if (mod_nonneg(bt(n), P) == 0 && mset.find(n) == mset.end()) {
      out.error = "condition (ii) fails at n=" + std::to_string(n);
      return out;
    }
  }
  // (iii) one period later, each zero class is nonzero mod p^2.
  for (long m : M) {
    BigInt r = mod_nonneg(bt(m + S), P2);
    if (r == 0) {
      out.error = "condition (iii) fails at m=" + std::to_string(m);
      return out;
    }
    invariant(r % P == 0, "period-S congruence mod p violated");
    out.cert.residues_mod_p2[m] = r;
  }
  out.ok = true;
  return out;
}

MTOutcome mt_certify_auto(const CubicInt& pi, const std::vector<long>& M,
                          std::uint64_t prime_limit) {
  require(prime_limit <= 1'000'000, "prime search limit too large");
  MTOutcome last;
  last.error = "no split prime below " + std::to_string(prime_limit);
  for (std::uint64_t p : primes_up_to(static_cast<std::uint32_t>(prime_limit))) {
    unsigned roots = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t v = (mulmod_u64(mulmod_u64(x, x, p), x, p) +
                         mulmod_u64(x, x, p) + p - 1) % p;
      if (v == 0) ++roots;
    }
    if (roots != 3) continue;
    MTOutcome attempt = mt_certify(pi, M, p, static_cast<long>(p) - 1);
    if (attempt.ok) return attempt;
    last = attempt;
  }
  last.ok = false;
  return last;
}

}  // namespace q3c
