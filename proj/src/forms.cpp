#include "q3c/forms.hpp"

#include <algorithm>

namespace q3c {

BigInt eval_A(const ParamPair& p) {
  const BigInt &m = p.m, &n = p.n;
  BigInt m2 = m * m, n2 = n * n;
  BigInt A = m2 * m2 * m2 + 2 * m2 * m2 * m * n + 4 * m2 * m2 * n2 +
             8 * m2 * m * n2 * n + 9 * m2 * n2 * n2 + 4 * m * n2 * n2 * n +
             n2 * n2 * n2;
  invariant(A > 0 && A % 2 == 1, "numerator form must be positive and odd");
  return A;
}

BigInt eval_s3(const ParamPair& p) {
  const BigInt &m = p.m, &n = p.n;
  return m * m * m + m * m * n - 2 * m * n * n - n * n * n;
}

std::pair<BigInt, BigInt> eval_B_C(const ParamPair& p) {
  BigInt prod = p.m * p.n * (p.m + p.n);
  invariant(prod % 2 == 0, "mn(m+n) must be even for a coprime pair");
  BigInt C = prod / 2;
  return {16 * C * C, C};
}

BigInt eval_t(int i, const ParamPair& p) {
  const BigInt &m = p.m, &n = p.n;
  switch (i) {
    case 1: return m * m * m + 2 * m * m * n + m * n * n + n * n * n;
    case 2: return m * m * m - m * n * n - n * n * n;
    case 3: return m * m * m + 2 * m * m * n + 3 * m * n * n + n * n * n;
    default: throw domain_error("eval_t: index must be 1, 2 or 3");
  }
}

CVal c_of_pair(const ParamPair& p) {
  CVal v;
  v.A = eval_A(p);
  std::tie(v.B, v.C) = eval_B_C(p);
  invariant(gcd(v.A, v.B) == 1, "numerator and denominator must be coprime");
  v.c = make_rat(-v.A, v.B);
  return v;
}

CycleData cycle_of_pair(const ParamPair& p) {
  CycleData cd{p, BigRat(), {}, {}, BigInt()};
  CVal v = c_of_pair(p);
  cd.c = v.c;
  cd.denom = 4 * v.C;
  cd.numerators = {eval_t(1, p), eval_t(2, p), -eval_t(3, p)};
  for (int i = 0; i < 3; ++i) {
    invariant(gcd(cd.numerators[i], cd.denom) == 1,
              "cycle fraction must be in lowest terms");
    cd.xs[i] = make_rat(cd.numerators[i], cd.denom);
  }
  for (int i = 0; i < 3; ++i) {
    invariant(cd.xs[i] * cd.xs[i] + cd.c == cd.xs[(i + 1) % 3],
              "orbit closure failed");
    invariant(cd.xs[i] != cd.xs[(i + 1) % 3], "cycle points must be distinct");
    for (int j = i + 1; j < 3; ++j)
      invariant(gcd(cd.numerators[i], cd.numerators[j]) == 1,
                "cycle numerators must be pairwise coprime");
  }
  return cd;
}

BigRat phi3_eval(const BigRat& x, const BigRat& y) {
  // x^6 + x^5 + (3y+1)x^4 + (2y+1)x^3 + (3y^2+3y+1)x^2 + (y+1)^2 x
  //   + y^3 + 2y^2 + y + 1, evaluated by Horner in x.
  BigRat acc = x + 1;                               // x + 1
  acc = acc * x + 3 * y + 1;                        // x^2 + x + 3y+1
  acc = acc * x + 2 * y + 1;
  acc = acc * x + 3 * y * y + 3 * y + 1;
  acc = acc * x + y * y + 2 * y + 1;
  acc = acc * x + y * y * y + 2 * y * y + y + 1;
  return acc;
}

std::pair<BigRat, BigRat> param_t(const BigRat& t) {
  require(t != 1 && t != -1, "parametrization has a pole at t = 1 and t = -1");
  BigRat t2 = t * t;
  BigRat den = 4 * (t2 - 1);
  BigRat x = (t * t2 + t2 - t + 7) / den;
  BigRat num = t2 * t2 * t2 - 2 * t2 * t2 * t + 11 * t2 * t2 + 20 * t2 * t +
               23 * t2 - 18 * t + 29;
  BigRat c = -num / (16 * (t2 - 1) * (t2 - 1));
  return {x, c};
}

bool norm_identity_check(const ParamPair& p) {
  BigInt A = eval_A(p);
  BigInt C = eval_B_C(p).second;
  BigInt t1 = eval_t(1, p), t2 = eval_t(2, p), t3 = eval_t(3, p);
  return t1 * t1 - A == 4 * C * t2 && t2 * t2 - A == -4 * C * t3 &&
         t3 * t3 - A == 4 * C * t1;
}

BigRat s_from_triangle(const BigInt& a1, const BigInt& a2, const BigInt& a3) {
  require(a1 * a1 != a3 * a3, "triangle parameter undefined when a1^2 = a3^2");
  return make_rat(-(a1 * a1 - a2 * a2), a1 * a1 - a3 * a3);
}

std::optional<ParamPair> pair_from_triangle(const BigInt& a1, const BigInt& a2,
                                            const BigInt& a3) {
  std::array<BigInt, 3> v{a1, a2, a3};
  std::array<BigInt, 3> sorted_in{q3c::abs(a1), q3c::abs(a2), q3c::abs(a3)};
  std::sort(sorted_in.begin(), sorted_in.end());
  std::sort(v.begin(), v.end());
  do {
    if (v[0] * v[0] == v[2] * v[2]) continue;
    BigRat s = s_from_triangle(v[0], v[1], v[2]);
    BigInt m = s.get_num(), n = s.get_den();
    if (!allowable(m, n)) continue;
    ParamPair cand(m, n);
    std::array<BigInt, 3> t{q3c::abs(eval_t(1, cand)), q3c::abs(eval_t(2, cand)),
                            q3c::abs(eval_t(3, cand))};
    std::sort(t.begin(), t.end());
    if (t == sorted_in) return canonical_pair(cand);
  } while (std::next_permutation(v.begin(), v.end()));
  return std::nullopt;
}

namespace {

/* Degree-<3 polynomials over Z/q, reduced modulo x^3 - x - 1
 * (so x^3 = x + 1, x^4 = x^2 + x). */
struct P3 {
  BigInt c0, c1, c2;
};

P3 p3_mulmod(const P3& u, const P3& v, const BigInt& q) {
  BigInt d0 = u.c0 * v.c0;
  BigInt d1 = u.c0 * v.c1 + u.c1 * v.c0;
  BigInt d2 = u.c0 * v.c2 + u.c1 * v.c1 + u.c2 * v.c0;
  BigInt d3 = u.c1 * v.c2 + u.c2 * v.c1;
  BigInt d4 = u.c2 * v.c2;
  return {mod_nonneg(d0 + d3, q), mod_nonneg(d1 + d3 + d4, q),
          mod_nonneg(d2 + d4, q)};
}

P3 p3_powmod_x(const BigInt& e, const BigInt& q) {
  P3 result{1, 0, 0};
  P3 base{0, 1, 0};  // x
  for (long i = static_cast<long>(bit_length(e)) - 1; i >= 0; --i) {
    result = p3_mulmod(result, result, q);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
      result = p3_mulmod(result, base, q);
  }
  return result;
}

/* gcd(x^q - x, x^3 - x - 1) over Z/q has degree = #distinct roots.  We only
 * need the degree, so run a tiny polynomial gcd on dense vectors. */
int gcd_degree_with_cubic(const BigInt& q) {
  P3 xq = p3_powmod_x(q, q);
  // x^q - x reduced mod the cubic:
  std::vector<BigInt> a{mod_nonneg(xq.c0, q), mod_nonneg(xq.c1 - 1, q),
                        mod_nonneg(xq.c2, q)};
  std::vector<BigInt> b{q - 1, q - 1, 0, 1};  // x^3 - x - 1 mod q
  auto deg = [](const std::vector<BigInt>& f) {
    for (long i = static_cast<long>(f.size()) - 1; i >= 0; --i)
      if (f[static_cast<size_t>(i)] != 0) return i;
    return -1L;
  };
  // Euclid on (b, a): all leading coefficients inverted mod the prime q.
  std::vector<BigInt> f = b, g = a;
  while (deg(g) >= 0) {
    long df = deg(f), dg = deg(g);
    if (df < dg) { std::swap(f, g); continue; }
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), g[static_cast<size_t>(dg)].get_mpz_t(),
               q.get_mpz_t());
    BigInt scale = mod_nonneg(f[static_cast<size_t>(df)] * inv, q);
    for (long i = 0; i <= dg; ++i) {
      auto& coef = f[static_cast<size_t>(df - dg + i)];
      coef = mod_nonneg(coef - scale * g[static_cast<size_t>(i)], q);
    }
    invariant(deg(f) < df, "polynomial division did not reduce degree");
    if (deg(f) < deg(g)) std::swap(f, g);
  }
  return static_cast<int>(deg(f));
}

}  // namespace

int cubic_root_count_mod(const BigInt& q) {
  require(q >= 2 && is_probable_prime(q), "root count needs a prime modulus");
  if (q < 100) {
    int count = 0;
    for (BigInt x = 0; x < q; ++x)
      if ((x * x * x - x - 1) % q == 0) ++count;
    return count;
  }
  return gcd_degree_with_cubic(q);
}

namespace {

ClassReport classify_common(const BigInt& value) {
  ClassReport rep;
  rep.value = value;
  Factorization f = factorize(q3c::abs(value));
  rep.complete = f.complete;
  if (!f.complete) rep.parts.push_back({f.cofactor, 1, '?'});
  for (const auto& [q, e] : f.factors) rep.parts.push_back({q, e, ' '});
  return rep;
}

}  // namespace

ClassReport classify_A_value(const BigInt& A) {
  require(A > 0, "classify: numerator must be positive");
  ClassReport rep = classify_common(A);
  unsigned seven_exp = 0;
  for (auto& part : rep.parts) {
    if (part.code == '?') continue;
    if (part.value == 7) {
      part.code = '7';
      seven_exp = part.exp;
    } else if (part.value % 7 == 1) {
      part.code = '1';
    } else {
      part.code = '!';
    }
  }
  rep.conforms = rep.complete && seven_exp <= 1 &&
                 std::none_of(rep.parts.begin(), rep.parts.end(),
                              [](const FactorClass& p) { return p.code == '!'; });
  return rep;
}

ClassReport classify_t_value(const BigInt& t) {
  require(t != 0, "classify: zero has no prime classification");
  ClassReport rep = classify_common(t);
  for (auto& part : rep.parts) {
    if (part.code == '?') continue;
    const BigInt& q = part.value;
    if (q == 2) {
      part.code = '!';
    } else if (q == 23) {
      part.code = 'i';
    } else if (legendre(-23, q) == -1) {
      part.code = 'n';
    } else {
      // Residue case: admissible exactly when the cubic splits completely,
      // which is equivalent to q = x^2 + 23 y^2 being solvable.
      part.code = cubic_root_count_mod(q) == 3 ? 'r' : '!';
    }
  }
  rep.conforms = rep.complete &&
                 std::none_of(rep.parts.begin(), rep.parts.end(),
                              [](const FactorClass& p) { return p.code == '!'; });
  return rep;
}

}  // namespace q3c
