#include "q3c/norm_solver.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>

#include "q3c/errors.hpp"

namespace q3c {

namespace {

using Key = std::tuple<BigInt, BigInt, BigInt, int, BigInt, BigInt, BigInt>;

Key rep_key(const CubicInt& w) {
  int first_sign = 1;
  if (w.a != 0) first_sign = sgn(w.a);
  else if (w.b != 0) first_sign = sgn(w.b);
  else if (w.c != 0) first_sign = sgn(w.c);
  return {q3c::abs(w.a), q3c::abs(w.b), q3c::abs(w.c),
          first_sign < 0 ? 1 : 0, w.a, w.b, w.c};
}

/* ---- square roots mod an odd prime (Tonelli-Shanks) ---- */

std::optional<BigInt> sqrt_mod(const BigInt& a_in, const BigInt& p) {
  BigInt a = mod_nonneg(a_in, p);
  if (a == 0) return BigInt(0);
  BigInt leg;
  mpz_powm(leg.get_mpz_t(), a.get_mpz_t(), BigInt((p - 1) / 2).get_mpz_t(),
           p.get_mpz_t());
  if (leg != 1) return std::nullopt;
  if (p % 4 == 3) {
    BigInt r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), BigInt((p + 1) / 4).get_mpz_t(),
             p.get_mpz_t());
    return r;
  }
  BigInt q = p - 1;
  unsigned long s = 0;
  while (q % 2 == 0) { q /= 2; ++s; }
  BigInt z = 2;
  while (true) {
    BigInt l;
    mpz_powm(l.get_mpz_t(), z.get_mpz_t(), BigInt((p - 1) / 2).get_mpz_t(),
             p.get_mpz_t());
    if (l == p - 1) break;
    ++z;
  }
  BigInt m = s, c, t, r;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), BigInt((q + 1) / 2).get_mpz_t(),
           p.get_mpz_t());
  while (t != 1) {
    BigInt tt = t;
    unsigned long i = 0;
    while (tt != 1) { tt = tt * tt % p; ++i; }
    BigInt b = c;
    for (BigInt j = 0; j < m - i - 1; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

/* ---- small dense polynomial arithmetic mod q, modulo x^3 - x - 1 ---- */

struct P3 { BigInt c0, c1, c2; };

P3 p3_mul(const P3& u, const P3& v, const BigInt& q) {
  BigInt d0 = u.c0 * v.c0;
  BigInt d1 = u.c0 * v.c1 + u.c1 * v.c0;
  BigInt d2 = u.c0 * v.c2 + u.c1 * v.c1 + u.c2 * v.c0;
  BigInt d3 = u.c1 * v.c2 + u.c2 * v.c1;
  BigInt d4 = u.c2 * v.c2;
  return {mod_nonneg(d0 + d3, q), mod_nonneg(d1 + d3 + d4, q),
          mod_nonneg(d2 + d4, q)};
}

P3 p3_pow(P3 base, const BigInt& e, const BigInt& q) {
  P3 result{1, 0, 0};
  for (long i = static_cast<long>(bit_length(e)) - 1; i >= 0; --i) {
    result = p3_mul(result, result, q);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
      result = p3_mul(result, base, q);
  }
  return result;
}

}  // namespace

std::vector<BigInt> cubic_roots_mod(const BigInt& q) {
  require(q >= 2 && is_probable_prime(q), "roots needed modulo a prime");
  std::vector<BigInt> roots;
  if (q < 1000) {
    for (BigInt x = 0; x < q; ++x)
      if ((x * x * x - x - 1) % q == 0) roots.push_back(x);
    return roots;
  }
  // gcd(x^q - x, x^3 - x - 1) splits off the roots; x^q via powering mod f.
  P3 xq = p3_pow(P3{0, 1, 0}, q, q);
  BigInt a0 = xq.c0, a1 = mod_nonneg(xq.c1 - 1, q), a2 = xq.c2;
  auto quadratic_roots = [&](const BigInt& b, const BigInt& c) {
    // roots of x^2 + b x + c mod q
    std::vector<BigInt> out;
    auto d = sqrt_mod(b * b - 4 * c, q);
    if (!d) return out;
    BigInt inv2;
    mpz_invert(inv2.get_mpz_t(), BigInt(2).get_mpz_t(), q.get_mpz_t());
    out.push_back(mod_nonneg((-b + *d) * inv2, q));
    if (*d != 0) out.push_back(mod_nonneg((-b - *d) * inv2, q));
    return out;
  };
  if (a2 == 0 && a1 == 0 && a0 == 0) {
    // x^q == x: the cubic splits completely.  Find one root by repeatedly
    // splitting with gcd((x+d)^((q-1)/2) - 1, f), then deflate.
    for (BigInt d = 0;; ++d) {
      P3 h = p3_pow(P3{d, 1, 0}, (q - 1) / 2, q);
      h.c0 = mod_nonneg(h.c0 - 1, q);
      // gcd(h, f) where f = x^3 - x - 1.  h has degree <= 2.
      if (h.c2 == 0 && h.c1 == 0) continue;  // h constant: no split
      BigInt r;
      if (h.c2 != 0) {
        // Reduce f mod h (degree 2), leaving a linear remainder.
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), h.c2.get_mpz_t(), q.get_mpz_t());
        BigInt b = mod_nonneg(h.c1 * inv, q), c = mod_nonneg(h.c0 * inv, q);
        // x^3 - x - 1 mod (x^2 + bx + c):
        BigInt lin = mod_nonneg(b * b - c - 1, q);
        BigInt con = mod_nonneg(b * c - 1, q);
        if (lin == 0 && con == 0) {
          // f divisible by the quadratic: its two roots are roots of f.
          auto rs = quadratic_roots(b, c);
          invariant(rs.size() == 2, "split quadratic must have two roots");
          // Third root from the trace: sum of roots of f is 0.
          roots = {rs[0], rs[1], mod_nonneg(-rs[0] - rs[1], q)};
          break;
        }
        if (lin == 0) continue;  // gcd is 1
        BigInt linv;
        mpz_invert(linv.get_mpz_t(), lin.get_mpz_t(), q.get_mpz_t());
        r = mod_nonneg(-con * linv, q);
      } else {
        r = mod_nonneg(-h.c0 *
                           [&] {
                             BigInt inv;
                             mpz_invert(inv.get_mpz_t(), h.c1.get_mpz_t(),
                                        q.get_mpz_t());
                             return inv;
                           }(),
                       q);
      }
      if ((r * r * r - r - 1) % q != 0) continue;
      // Deflate: x^3 - x - 1 = (x - r)(x^2 + rx + (r^2 - 1)) mod q.
      roots.push_back(r);
      for (const BigInt& s : quadratic_roots(r, r * r - 1))
        if (s != r) roots.push_back(s);
      break;
    }
  } else {
    // Partial split or inert: gcd(x^3 - x - 1, x^q - x) is the product of
    // the distinct linear factors of the cubic over F_q.  The residue
    // g = a2 x^2 + a1 x + a0 alone is NOT that gcd (for inert q its roots
    // are unrelated to f), so run Euclid on the degree <= 2 remainders.
    using Poly = std::vector<BigInt>;  // coefficients, constant term first
    auto trim = [](Poly& u) {
      while (!u.empty() && u.back() == 0) u.pop_back();
    };
    auto poly_rem = [&](Poly u, const Poly& v) -> Poly {
      BigInt inv;
      mpz_invert(inv.get_mpz_t(), v.back().get_mpz_t(), q.get_mpz_t());
      while (u.size() >= v.size()) {
        BigInt lead = mod_nonneg(u.back() * inv, q);
        size_t off = u.size() - v.size();
        for (size_t i = 0; i + 1 < v.size(); ++i)
          u[off + i] = mod_nonneg(u[off + i] - lead * v[i], q);
        u.pop_back();  // the leading term cancels exactly
        trim(u);
      }
      return u;
    };
    Poly g1{mod_nonneg(-1, q), mod_nonneg(-1, q), BigInt(0), BigInt(1)};
    Poly g2{a0, a1, a2};
    trim(g2);
    while (!g2.empty()) {
      Poly rem = poly_rem(g1, g2);
      g1 = std::move(g2);
      g2 = std::move(rem);
    }
    invariant(g1.size() >= 1 && g1.size() <= 3,
              "linear-factor gcd has impossible degree");
    if (g1.size() >= 2) {
      BigInt inv;
      mpz_invert(inv.get_mpz_t(), g1.back().get_mpz_t(), q.get_mpz_t());
      if (g1.size() == 2) {
        roots.push_back(mod_nonneg(-g1[0] * inv, q));
      } else {
        for (const BigInt& s : quadratic_roots(mod_nonneg(g1[1] * inv, q),
                                               mod_nonneg(g1[0] * inv, q)))
          roots.push_back(s);
      }
    }
  }
  for (const BigInt& r : roots)
    invariant((r * r * r - r - 1) % q == 0, "claimed root is not a root");
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

/* ---- exact lattice reduction (rank 3, rational Gram-Schmidt) ---- */

using Vec3 = std::array<BigInt, 3>;

void lll_reduce(std::array<Vec3, 3>& b) {
  auto rdot = [](const std::array<BigRat, 3>& u,
                 const std::array<BigRat, 3>& v) -> BigRat {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  };
  auto as_rat = [](const Vec3& v) {
    return std::array<BigRat, 3>{BigRat(v[0]), BigRat(v[1]), BigRat(v[2])};
  };
  const BigRat delta(99, 100);
  std::array<std::array<BigRat, 3>, 3> star;
  std::array<std::array<BigRat, 3>, 3> mu;
  std::array<BigRat, 3> B;
  auto gram = [&] {
    for (int i = 0; i < 3; ++i) {
      star[i] = as_rat(b[i]);
      for (int j = 0; j < i; ++j) {
        mu[i][j] = B[j] == 0 ? BigRat(0) : rdot(as_rat(b[i]), star[j]) / B[j];
        for (int k = 0; k < 3; ++k) star[i][k] -= mu[i][j] * star[j][k];
      }
      B[i] = rdot(star[i], star[i]);
    }
  };
  auto round_rat = [](const BigRat& x) {
    BigInt num = x.get_num(), den = x.get_den();
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * r >= den) q += 1;
    return q;
  };
  gram();
  int k = 1;
  int guard = 0;
  while (k < 3) {
    invariant(++guard < 10000, "lattice reduction did not terminate");
    for (int j = k - 1; j >= 0; --j) {
      BigInt q = round_rat(mu[k][j]);
      if (q != 0)
        for (int t = 0; t < 3; ++t) b[k][t] -= q * b[j][t];
    }
    gram();
    if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gram();
      k = std::max(k - 1, 1);
    }
  }
}

BigInt norm_vec(const Vec3& v) { return norm(CubicInt{v[0], v[1], v[2]}); }

}  // namespace

CubicInt ideal_generator(const BigInt& q, const BigInt& r) {
  require((r * r * r - r - 1) % q == 0, "r must be a root of the cubic mod q");
  std::array<Vec3, 3> basis{Vec3{q, 0, 0}, Vec3{-r, 1, 0}, Vec3{-(r * r), 0, 1}};
  lll_reduce(basis);
  for (long radius : {4L, 8L, 16L}) {
    CubicInt best;
    bool found = false;
    Key best_key{};
    for (long c0 = -radius; c0 <= radius; ++c0)
      for (long c1 = -radius; c1 <= radius; ++c1)
        for (long c2 = -radius; c2 <= radius; ++c2) {
          if (c0 == 0 && c1 == 0 && c2 == 0) continue;
          Vec3 v{c0 * basis[0][0] + c1 * basis[1][0] + c2 * basis[2][0],
                 c0 * basis[0][1] + c1 * basis[1][1] + c2 * basis[2][1],
                 c0 * basis[0][2] + c1 * basis[1][2] + c2 * basis[2][2]};
          if (q3c::abs(norm_vec(v)) != q) continue;
          CubicInt cand{v[0], v[1], v[2]};
          Key key = rep_key(cand);
          if (!found || key < best_key) { best = cand; best_key = key; found = true; }
        }
    if (found) return best;
  }
  throw internal_error("no short generator found for ideal (" + to_dec(q) +
                       ", g - " + to_dec(r) + ")");
}

BigInt default_box(const BigInt& a) {
  BigInt root;
  mpz_root(root.get_mpz_t(), a.get_mpz_t(), 3);
  // mpz_root truncates; bump to the ceiling before scaling.
  if (root * root * root < a) root += 1;
  BigInt box = 4 * root;
  return box < 50 ? BigInt(50) : box;
}

NormClass elements_of_norm(const BigInt& a, const BigInt& box_in) {
  require(a > 0, "norm target must be positive");
  NormClass out;
  out.target = a;
  if (a == 1) return out;  // only units; no nonunit classes
  const BigInt box = box_in > 0 ? box_in : default_box(a);
  std::map<Key, CubicInt> classes;
  bool boundary_hit = false;
  // For fixed (y, z), N(x + y g + z g^2) is monic cubic in x:
  //   x^3 + 2z x^2 + (z^2 - y^2 - 3yz) x + (y^3 + z^3 - y z^2)
  for (BigInt y = -box; y <= box; ++y)
    for (BigInt z = -box; z <= box; ++z) {
      BigInt p2 = 2 * z;
      BigInt p1 = z * z - y * y - 3 * y * z;
      BigInt p0base = y * y * y + z * z * z - y * z * z;
      for (int s = -1; s <= 1; s += 2) {
        for (const BigInt& x : monic_cubic_roots(p2, p1, p0base - s * a)) {
          if (q3c::abs(x) > box) continue;
          CubicInt u{x, y, z};
          invariant(q3c::abs(norm(u)) == a, "box hit with wrong norm");
          if (q3c::abs(x) == box || q3c::abs(y) == box || q3c::abs(z) == box)
            boundary_hit = true;
          CubicInt rep = canonical_associate(u);
          classes.emplace(rep_key(rep), rep);
        }
      }
    }
  for (auto& [key, rep] : classes) out.representatives.push_back(rep);
  out.complete = !boundary_hit;
  return out;
}

NormClass elements_of_norm_factored(const BigInt& a, std::uint64_t rho_budget) {
  require(a > 0, "norm target must be positive");
  NormClass out;
  out.target = a;
  if (a == 1) return out;
  Factorization fact = factorize(a, rho_budget);
  if (!fact.complete) {
    out.complete = false;
    return out;
  }
  struct IdealData {
    CubicInt gen;
    unsigned fdeg;  // residue degree: norm(gen) = +-q^fdeg
    unsigned ram;   // multiplicity of this ideal in (q)
  };
  // Per prime: the list of admissible exponent vectors.
  std::vector<std::vector<CubicInt>> prime_choices;
  for (const auto& [q, e] : fact.factors) {
    std::vector<BigInt> roots = cubic_roots_mod(q);
    std::vector<IdealData> ideals;
    if (roots.empty()) {
      // Inert prime: all its norms are cubes with a rational-prime divisor.
      return out;  // complete=true, no primitive element exists
    } else if (q == 23) {
      invariant(roots.size() == 2, "unexpected splitting at 23");
      ideals.push_back({ideal_generator(q, roots[0]), 1, roots[0] == 3 ? 1u : 2u});
      ideals.push_back({ideal_generator(q, roots[1]), 1, roots[1] == 10 ? 2u : 1u});
    } else if (roots.size() == 1) {
      CubicInt g1 = ideal_generator(q, roots[0]);
      auto g2 = divide_exact(CubicInt{q, 0, 0}, g1);
      invariant(g2.has_value(), "degree-2 cofactor must divide q");
      ideals.push_back({g1, 1, 1});
      ideals.push_back({*g2, 2, 1});
    } else {
      invariant(roots.size() == 3, "unexpected root count");
      for (const BigInt& r : roots) ideals.push_back({ideal_generator(q, r), 1, 1});
    }
    for (const auto& id : ideals)
      invariant(q3c::abs(norm(id.gen)) == pow_ui(q, id.fdeg),
                "ideal generator has wrong norm");
    // Enumerate exponent vectors n with sum n_i * fdeg_i = e, skipping the
    // non-primitive ones (n_i >= ram_i for every i).
    std::vector<CubicInt> choices;
    std::vector<unsigned> expo(ideals.size(), 0);
    auto emit = [&] {
      bool divisible_by_q = true;
      for (size_t i = 0; i < ideals.size(); ++i)
        if (expo[i] < ideals[i].ram) { divisible_by_q = false; break; }
      if (divisible_by_q) return;
      CubicInt prod{1, 0, 0};
      for (size_t i = 0; i < ideals.size(); ++i)
        for (unsigned t = 0; t < expo[i]; ++t) prod = mul(prod, ideals[i].gen);
      choices.push_back(prod);
    };
    auto rec = [&](auto&& self, size_t idx, unsigned remaining) -> void {
      if (idx + 1 == ideals.size()) {
        if (remaining % ideals[idx].fdeg == 0) {
          expo[idx] = remaining / ideals[idx].fdeg;
          emit();
        }
        return;
      }
      for (unsigned n = 0; n * ideals[idx].fdeg <= remaining; ++n) {
        expo[idx] = n;
        self(self, idx + 1, remaining - n * ideals[idx].fdeg);
      }
    };
    rec(rec, 0, e);
    if (choices.empty()) return out;  // no primitive decomposition at q
    prime_choices.push_back(std::move(choices));
  }
  // Cartesian product across primes.
  std::vector<CubicInt> acc{CubicInt{1, 0, 0}};
  for (const auto& choices : prime_choices) {
    std::vector<CubicInt> next;
    for (const auto& partial : acc)
      for (const auto& choice : choices) next.push_back(mul(partial, choice));
    acc = std::move(next);
  }
  std::map<Key, CubicInt> classes;
  for (const auto& u : acc) {
    invariant(q3c::abs(norm(u)) == a, "combined element has wrong norm");
    CubicInt rep = canonical_associate(u);
    classes.emplace(rep_key(rep), rep);
  }
  invariant(classes.size() == acc.size(),
            "distinct ideal decompositions collided");
  for (auto& [key, rep] : classes) out.representatives.push_back(rep);
  return out;
}

}  // namespace q3c
