#include "q3c/intmath.hpp"

#include <algorithm>

namespace q3c {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, b, m);
    b = mulmod_u64(b, b, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // This witness set decides primality for every n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime_u64(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<bool> sieve(static_cast<size_t>(limit) + 1, true);
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  sieve[0] = sieve[1] = false;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!sieve[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) sieve[j] = false;
  }
  return out;
}

namespace {

/* Pollard-Brent rho; returns a nontrivial factor of composite odd n, or 0 on
 * budget exhaustion.  `iters` counts squarings consumed across restarts. */
BigInt rho_brent(const BigInt& n, std::uint64_t& budget) {
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(0xC0FFEEuL);  // fixed seed: deterministic runs
  while (budget > 0) {
    BigInt y = rng.get_z_range(n - 3) + 2;
    BigInt c = rng.get_z_range(n - 1) + 1;
    BigInt x = y, q = 1, g = 1, ys = y;
    const unsigned long m = 128;
    unsigned long r = 1;
    while (g == 1 && budget > 0) {
      x = y;
      for (unsigned long i = 0; i < r && budget > 0; ++i) {
        y = (y * y + c) % n;
        --budget;
      }
      unsigned long k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        const unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim && budget > 0; ++i) {
          y = (y * y + c) % n;
          --budget;
          q = q * q3c::abs(x - y) % n;
        }
        g = gcd(q, n);
        k += lim;
      }
      r <<= 1;
    }
    if (g == n) {
      // Backtrack one step at a time to split the batched gcd.
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = gcd(q3c::abs(x - ys), n);
      }
    }
    if (g != n && g != 1) return g;
    // g == n: cycle collision; retry with fresh parameters.
  }
  return 0;
}

void factor_rec(const BigInt& n, std::uint64_t& budget,
                std::vector<BigInt>& primes, BigInt& leftover) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    primes.push_back(n);
    return;
  }
  BigInt d = rho_brent(n, budget);
  if (d == 0) {
    leftover *= n;
    return;
  }
  factor_rec(d, budget, primes, leftover);
  factor_rec(n / d, budget, primes, leftover);
}

}  // namespace

namespace {

/* The default trial-division sieve is shared across calls (magic-static,
 * thread-safe); non-default limits fall back to a fresh sieve. */
const std::vector<std::uint32_t>& trial_primes(std::uint32_t limit,
                                               std::vector<std::uint32_t>& own) {
  static const std::vector<std::uint32_t> kDefault = primes_up_to(1'000'000);
  if (limit == 1'000'000) return kDefault;
  own = primes_up_to(limit);
  return own;
}

}  // namespace

Factorization factorize(const BigInt& n, std::uint64_t rho_budget,
                        std::uint32_t trial_limit) {
  require(n >= 1, "factorize: n must be positive");
  Factorization out;
  BigInt rest = n;
  std::vector<BigInt> primes;
  std::vector<std::uint32_t> own_sieve;
  for (std::uint32_t p : trial_primes(trial_limit, own_sieve)) {
    if (BigInt(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      primes.emplace_back(p);
      rest /= p;
    }
  }
  if (rest > 1) {
    if (is_probable_prime(rest)) {
      primes.push_back(rest);
    } else {
      BigInt leftover = 1;
      std::uint64_t budget = rho_budget;
      factor_rec(rest, budget, primes, leftover);
      if (leftover > 1) {
        out.cofactor = leftover;
        out.complete = false;
      }
    }
  }
  std::sort(primes.begin(), primes.end());
  for (size_t i = 0; i < primes.size();) {
    size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    out.factors.emplace_back(primes[i], static_cast<unsigned>(j - i));
    i = j;
  }
  return out;
}

int legendre(const BigInt& a, const BigInt& p) {
  require(p > 2 && p % 2 == 1 && is_probable_prime(p),
          "legendre: p must be an odd prime");
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

std::vector<std::pair<BigInt, BigInt>> represent_x2_Dy2(const BigInt& k,
                                                        const BigInt& D) {
  require(k >= 0, "represent: k must be nonnegative");
  require(D > 0, "represent: D must be positive");
  std::vector<std::pair<BigInt, BigInt>> out;
  for (BigInt y = 0; D * y * y <= k; ++y) {
    BigInt x;
    if (is_perfect_square(k - D * y * y, &x)) out.emplace_back(x, y);
  }
  return out;
}

namespace {

/* Integer roots of x^3 + p2 x^2 + p1 x + p0 on a segment [lo, hi] where the
 * cubic is monotone. */
void roots_on_monotone(const BigInt& p2, const BigInt& p1, const BigInt& p0,
                       BigInt lo, BigInt hi, std::vector<BigInt>& out) {
  auto eval = [&](const BigInt& x) -> BigInt {
    return ((x + p2) * x + p1) * x + p0;
  };
  if (lo > hi) return;
  BigInt flo = eval(lo), fhi = eval(hi);
  if (flo == 0) out.push_back(lo);
  if (fhi == 0 && hi != lo) out.push_back(hi);
  if (sgn(flo) * sgn(fhi) >= 0) return;
  int dir = sgn(fhi);
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    BigInt fm = eval(mid);
    if (fm == 0) { out.push_back(mid); return; }
    if (sgn(fm) == dir) hi = mid; else lo = mid;
  }
}

}  // namespace

std::vector<BigInt> monic_cubic_roots(const BigInt& p2, const BigInt& p1,
                                      const BigInt& p0) {
  // Every root satisfies |x| <= 1 + max|coeff|; split the range at integer
  // brackets around the critical points of 3x^2 + 2 p2 x + p1 so each piece
  // is monotone.
  BigInt X = 1 + std::max(abs(p2), std::max(abs(p1), abs(p0)));
  std::vector<BigInt> cuts{-X, X};
  BigInt disc = p2 * p2 - 3 * p1;
  if (disc >= 0) {
    // Bracket each critical point (-p2 +- sqrt(disc))/3 between adjacent
    // integer cuts: isqrt and floor division are off by at most one each, so
    // cuts at v-2..v+2 guarantee a unit segment (no interior integers)
    // around the true critical point; all other segments are monotone.
    BigInt s = isqrt(disc);
    for (const BigInt& num : {BigInt(-p2 - s), BigInt(-p2 + s)}) {
      BigInt v;
      mpz_fdiv_q_ui(v.get_mpz_t(), num.get_mpz_t(), 3);
      for (long d = -2; d <= 2; ++d) {
        BigInt c = v + d;
        if (c > -X && c < X) cuts.push_back(c);
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<BigInt> roots;
  for (size_t i = 0; i + 1 < cuts.size(); ++i)
    roots_on_monotone(p2, p1, p0, cuts[i], cuts[i + 1], roots);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  for (const BigInt& x : roots)
    invariant(((x + p2) * x + p1) * x + p0 == 0, "cubic root check failed");
  return roots;
}

std::uint64_t mult_order_u64(std::uint64_t a, std::uint64_t p) {
  require(p >= 2 && a % p != 0, "mult_order: a must be a unit mod p");
  std::uint64_t order = p - 1;
  Factorization f = factorize(BigInt(static_cast<unsigned long>(p - 1)));
  invariant(f.complete, "mult_order: group order did not factor");
  for (const auto& [q, e] : f.factors) {
    std::uint64_t qq = q.get_ui();
    for (unsigned i = 0; i < e; ++i) {
      if (powmod_u64(a, order / qq, p) == 1)
        order /= qq;
      else
        break;
    }
  }
  return order;
}

}  // namespace q3c
