#include "q3c/padic.hpp"

#include <algorithm>
#include <cstdint>

#include "q3c/errors.hpp"
#include "q3c/intmath.hpp"

namespace q3c {

std::vector<FpCycle> cycles_mod_p(std::uint64_t p, std::uint64_t c_mod_p) {
  require(p >= 2 && is_prime_u64(p), "modulus must be prime");
  require(p <= 50'000'000, "modulus too large for a full cycle census");
  const std::uint64_t c = c_mod_p % p;
  auto step = [&](std::uint64_t x) { return (mulmod_u64(x, x, p) + c) % p; };
  // Functional-graph traversal: walk unvisited nodes, peel the cycle when a
  // walk meets itself.
  std::vector<std::uint8_t> state(p, 0);  // 0 new, 1 on current path, 2 done
  std::vector<std::uint32_t> pos(p, 0);
  std::vector<FpCycle> out;
  std::vector<std::uint64_t> path;
  for (std::uint64_t s = 0; s < p; ++s) {
    if (state[s]) continue;
    path.clear();
    std::uint64_t x = s;
    while (state[x] == 0) {
      state[x] = 1;
      pos[x] = static_cast<std::uint32_t>(path.size());
      path.push_back(x);
      x = step(x);
    }
    if (state[x] == 1) {
      FpCycle cyc;
      cyc.p = p;
      cyc.elements.assign(path.begin() + pos[x], path.end());
      auto mn = std::min_element(cyc.elements.begin(), cyc.elements.end());
      std::rotate(cyc.elements.begin(), mn, cyc.elements.end());
      cyc.mu = 1;
      for (std::uint64_t a : cyc.elements) cyc.mu = mulmod_u64(cyc.mu, 2 * a % p, p);
      cyc.r = cyc.mu == 0 ? 0 : mult_order_u64(cyc.mu, p);
      if (p > 2)
        invariant(cyc.m() <= (p + 1) / 2, "cycle longer than the square count");
      out.push_back(std::move(cyc));
    }
    for (std::uint64_t y : path) state[y] = 2;
  }
  std::sort(out.begin(), out.end(), [](const FpCycle& a, const FpCycle& b) {
    if (a.elements.size() != b.elements.size())
      return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return out;
}

PeriodConstraint allowed_periods(std::uint64_t p, const BigRat& c, Rule rule) {
  require(p >= 2 && is_prime_u64(p), "modulus must be prime");
  if (mpz_fdiv_ui(c.get_den().get_mpz_t(), p) == 0)
    throw domain_error("bad reduction at p");
  std::uint64_t num = mpz_fdiv_ui(c.get_num().get_mpz_t(), p);
  std::uint64_t den = mpz_fdiv_ui(c.get_den().get_mpz_t(), p);
  std::uint64_t c_mod = mulmod_u64(num, powmod_u64(den, p - 2, p), p);
  PeriodConstraint pc;
  pc.p = p;
  for (const FpCycle& cyc : cycles_mod_p(p, c_mod)) {
    const std::uint64_t m = cyc.m();
    if (cyc.mu == 0) {
      pc.finite.insert(m);  // multiplier zero: no lift beyond the cycle length
      continue;
    }
    const std::uint64_t mr = m * cyc.r;
    pc.finite.insert(m);
    pc.finite.insert(mr);
    if (rule == Rule::Pezda) {
      // Finite in all cases; p <= 3 additionally admits m*r*p.
      if (p <= 3) pc.tails.push_back({mr, p, true});
    } else {
      pc.tails.push_back({mr, p, false});
    }
  }
  // Dedupe tails by (base, capped); the prime is fixed here.
  std::sort(pc.tails.begin(), pc.tails.end(),
            [](const PeriodTail& a, const PeriodTail& b) {
              return std::tie(a.base, a.capped) < std::tie(b.base, b.capped);
            });
  pc.tails.erase(std::unique(pc.tails.begin(), pc.tails.end(),
                             [](const PeriodTail& a, const PeriodTail& b) {
                               return a.base == b.base && a.capped == b.capped;
                             }),
                 pc.tails.end());
  return pc;
}

namespace {

std::uint64_t valuation_u64(std::uint64_t n, std::uint64_t p) {
  std::uint64_t v = 0;
  while (n % p == 0) { n /= p; ++v; }
  return v;
}

bool tail_contains(const PeriodTail& t, std::uint64_t x) {
  if (x == 0 || x % t.base != 0) return false;
  std::uint64_t q = x / t.base;
  if (q < t.p) return false;
  while (q % t.p == 0) q /= t.p;
  return q == 1;
}

bool any_tail_contains(const std::vector<PeriodTail>& ts, std::uint64_t x) {
  for (const PeriodTail& t : ts)
    if (tail_contains(t, x)) return true;
  return false;
}

void push_tail_unique(std::vector<PeriodTail>& ts, const PeriodTail& t) {
  for (const PeriodTail& u : ts)
    if (u.base == t.base && u.p == t.p) return;
  ts.push_back(t);
}

}  // namespace

ExcludeReport exclude_periods(const ParamPair& pair,
                              const std::vector<std::uint64_t>& primes,
                              bool assume_poonen) {
  ExcludeReport rep{pair, {}, {}, assume_poonen, {}, {}, false, {}};
  const BigRat c = c_of_pair(pair).c;
  for (std::uint64_t p : primes) {
    try {
      PeriodConstraint pc =
          allowed_periods(p, c, p <= 3 ? Rule::Pezda : Rule::MS);
      rep.provenance.push_back(std::move(pc));
      rep.primes_used.push_back(p);
    } catch (const domain_error&) {
      rep.primes_skipped.push_back(p);
    }
  }
  require(!rep.provenance.empty(), "no prime of good reduction in the list");

  // Normalize a constraint to (finite, open tails): capped tails are just
  // the single value base*p.
  auto normalized = [](const PeriodConstraint& pc) {
    std::pair<std::set<std::uint64_t>, std::vector<PeriodTail>> out;
    out.first = pc.finite;
    for (const PeriodTail& t : pc.tails) {
      if (t.capped)
        out.first.insert(t.base * t.p);
      else
        out.second.push_back(t);
    }
    return out;
  };

  auto [F, T] = normalized(rep.provenance.front());
  for (std::size_t i = 1; i < rep.provenance.size(); ++i) {
    auto [F2, T2] = normalized(rep.provenance[i]);
    std::set<std::uint64_t> F_next;
    for (std::uint64_t f : F)
      if (F2.count(f) || any_tail_contains(T2, f)) F_next.insert(f);
    for (std::uint64_t f : F2)
      if (any_tail_contains(T, f)) F_next.insert(f);
    std::vector<PeriodTail> T_next;
    for (const PeriodTail& t : T) {
      for (const PeriodTail& u : T2) {
        if (t.p == u.p) {
          // Nested or disjoint: {b p^e} meets {b' p^e} iff one base is the
          // other times a power of p; the smaller tail survives whole.
          std::uint64_t b1 = t.base, b2 = u.base;
          if (b1 == b2) { push_tail_unique(T_next, t); continue; }
          std::uint64_t big = std::max(b1, b2), small = std::min(b1, b2);
          if (big % small == 0) {
            std::uint64_t q = big / small;
            while (q % t.p == 0) q /= t.p;
            if (q == 1) push_tail_unique(T_next, b1 > b2 ? t : u);
          }
        } else {
          // Distinct primes force the exponents: v_p of a common value is
          // fixed by the other base, so at most one candidate exists.
          std::uint64_t e = valuation_u64(u.base, t.p);
          std::uint64_t vt = valuation_u64(t.base, t.p);
          if (e > vt) {
            unsigned __int128 x = t.base;
            for (std::uint64_t j = 0; j < e - vt; ++j) x *= t.p;
            if (x <= 2'000'000'000'000'000'000ull) {
              auto xv = static_cast<std::uint64_t>(x);
              if (tail_contains(u, xv)) F_next.insert(xv);
            }
          }
        }
      }
    }
    F = std::move(F_next);
    T = std::move(T_next);
  }

  if (assume_poonen) {
    F.erase(1);
    F.erase(2);
    for (PeriodTail& t : T)
      if (t.base == 1 && t.p == 2) t.base = 2;  // drop the n = 2 element
  }
  rep.remaining = std::move(F);
  rep.remaining_tails = std::move(T);
  rep.only3 = rep.remaining_tails.empty() &&
              rep.remaining == std::set<std::uint64_t>{3};
  return rep;
}

ShapeDetail phi3_shape_mod_p(std::uint64_t p) {
  require(p >= 3 && is_prime_u64(p), "need an odd prime");
  require(p <= 100'000, "census bound out of range");
  ShapeDetail out;
  out.p = p;
  for (std::uint64_t c = 0; c < p; ++c) {
    // Period-3 divisor polynomial of x^2 + c, coefficients mod p:
    // x^6 + x^5 + (3c+1)x^4 + (2c+1)x^3 + (3c^2+3c+1)x^2 + (c^2+2c+1)x
    //   + c^3 + 2c^2 + c + 1
    const std::uint64_t c2 = mulmod_u64(c, c, p);
    const std::uint64_t c3 = mulmod_u64(c2, c, p);
    const std::uint64_t k4 = (3 * c % p + 1) % p;
    const std::uint64_t k3 = (2 * c % p + 1) % p;
    const std::uint64_t k2 = (3 * c2 % p + 3 * c % p + 1) % p;
    const std::uint64_t k1 = (c2 + 2 * c % p + 1) % p;
    const std::uint64_t k0 = (c3 + 2 * c2 % p + c + 1) % p;
    bool has_root = false;
    for (std::uint64_t x = 0; x < p && !has_root; ++x) {
      std::uint64_t v = 1;  // Horner on x^6 + x^5 + k4 x^4 + ... + k0
      v = (mulmod_u64(v, x, p) + 1) % p;
      v = (mulmod_u64(v, x, p) + k4) % p;
      v = (mulmod_u64(v, x, p) + k3) % p;
      v = (mulmod_u64(v, x, p) + k2) % p;
      v = (mulmod_u64(v, x, p) + k1) % p;
      v = (mulmod_u64(v, x, p) + k0) % p;
      if (v == 0) has_root = true;
    }
    if (has_root) out.cs.push_back(c);
  }
  out.N = out.cs.size();
  out.bound = (BigInt(p) + 2 * legendre(-3, p)) / 3;
  out.within = BigInt(out.N) <= out.bound;
  out.equality = BigInt(out.N) == out.bound;
  return out;
}

std::vector<Table2Row> table2() {
  std::vector<Table2Row> rows;
  for (std::uint64_t c : {11, 14, 15, 20, 21, 27}) {
    for (const FpCycle& cyc : cycles_mod_p(29, c)) {
      Table2Row row;
      row.c = c;
      row.cycle = cyc;
      row.n_candidates.push_back(cyc.m());
      if (cyc.mu != 0 && cyc.r > 1) row.n_candidates.push_back(cyc.m() * cyc.r);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace q3c
