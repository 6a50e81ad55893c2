#include "q3c/cubic.hpp"

#include <tuple>

#include "q3c/errors.hpp"

namespace q3c {

std::string CubicInt::str() const {
  return "[" + to_dec(a) + "," + to_dec(b) + "," + to_dec(c) + "]";
}

CubicInt add(const CubicInt& u, const CubicInt& v) {
  return {u.a + v.a, u.b + v.b, u.c + v.c};
}

CubicInt sub(const CubicInt& u, const CubicInt& v) {
  return {u.a - v.a, u.b - v.b, u.c - v.c};
}

CubicInt neg(const CubicInt& u) { return {-u.a, -u.b, -u.c}; }

CubicInt mul(const CubicInt& u, const CubicInt& v) {
  // (a+bg+cg^2)(d+eg+fg^2) with g^3 = 1+g, g^4 = g+g^2.
  const BigInt &a = u.a, &b = u.b, &c = u.c;
  const BigInt &d = v.a, &e = v.b, &f = v.c;
  return {a * d + b * f + c * e,
          a * e + b * d + b * f + c * e + c * f,
          a * f + b * e + c * d + c * f};
}

CubicInt mul_g(const CubicInt& u) { return {u.c, u.a + u.c, u.b}; }

CubicInt mul_g_inv(const CubicInt& u) { return {u.b - u.a, u.c, u.a}; }

CubicInt g_pow(long k) {
  CubicInt r{1, 0, 0};
  if (k >= 0)
    for (long i = 0; i < k; ++i) r = mul_g(r);
  else
    for (long i = 0; i > k; --i) r = mul_g_inv(r);
  return r;
}

BigInt norm(const CubicInt& u) {
  const BigInt &a = u.a, &b = u.b, &c = u.c;
  return a * a * a + b * b * b + c * c * c + 2 * a * a * c + a * c * c -
         a * b * b - 3 * a * b * c - b * c * c;
}

std::optional<CubicInt> divide_exact(const CubicInt& u, const CubicInt& v) {
  require(!v.is_zero(), "division by zero element");
  // Columns of the multiplication-by-v matrix: v, v*g, v*g^2.
  const CubicInt v1 = mul_g(v), v2 = mul_g(v1);
  const BigInt det = norm(v);
  invariant(det != 0, "nonzero element with zero norm");
  auto det3 = [](const CubicInt& x, const CubicInt& y,
                 const CubicInt& z) -> BigInt {
    return x.a * (y.b * z.c - y.c * z.b) - y.a * (x.b * z.c - x.c * z.b) +
           z.a * (x.b * y.c - x.c * y.b);
  };
  // Cramer: replace each column by u in M = [v v1 v2].
  BigInt w0 = det3(u, v1, v2);
  BigInt w1 = det3(v, u, v2);
  BigInt w2 = det3(v, v1, u);
  if (w0 % det != 0 || w1 % det != 0 || w2 % det != 0) return std::nullopt;
  CubicInt w{w0 / det, w1 / det, w2 / det};
  invariant(mul(v, w) == u, "exact division check failed");
  return w;
}

AssocResult is_associate(const CubicInt& u, const CubicInt& v, long K_assoc) {
  require(!u.is_zero() && !v.is_zero(), "associate test needs nonzero inputs");
  if (q3c::abs(norm(u)) != q3c::abs(norm(v))) return {};
  auto q = divide_exact(u, v);
  if (!q) return {};
  BigInt nq = norm(*q);
  if (nq != 1 && nq != -1) return {};
  // q is a unit: +-g^k.  Walk the exponent outward from 0.
  CubicInt fwd{1, 0, 0}, bwd{1, 0, 0};
  for (long k = 0; k <= K_assoc; ++k) {
    if (*q == fwd) return {true, k, +1};
    if (*q == neg(fwd)) return {true, k, -1};
    if (k > 0) {
      if (*q == bwd) return {true, -k, +1};
      if (*q == neg(bwd)) return {true, -k, -1};
    }
    fwd = mul_g(fwd);
    bwd = mul_g_inv(bwd);
  }
  throw domain_error("exponent window exceeded");
}

CubicInt canonical_associate(const CubicInt& u, long K_assoc) {
  require(!u.is_zero(), "canonical associate of zero");
  auto key = [](const CubicInt& w) {
    int first_sign = 1;  // prefer a positive leading (lowest-order) coefficient
    if (w.a != 0) first_sign = sgn(w.a);
    else if (w.b != 0) first_sign = sgn(w.b);
    else if (w.c != 0) first_sign = sgn(w.c);
    return std::tuple<BigInt, BigInt, BigInt, int, BigInt, BigInt, BigInt>(
        q3c::abs(w.a), q3c::abs(w.b), q3c::abs(w.c), first_sign < 0 ? 1 : 0,
        w.a, w.b, w.c);
  };
  auto max_abs = [](const CubicInt& w) {
    return std::max(q3c::abs(w.a), std::max(q3c::abs(w.b), q3c::abs(w.c)));
  };
  CubicInt best = u;
  auto best_key = key(best);
  auto consider = [&](const CubicInt& w) {
    for (const CubicInt& cand : {w, neg(w)}) {
      auto k = key(cand);
      if (k < best_key) { best = cand; best_key = k; }
    }
  };
  consider(u);
  // Coefficient size is eventually monotone in the unit exponent in both
  // directions; a generous growth cutoff makes the scan exact and cheap.
  const BigInt cutoff_factor = 1'000'000;
  for (int dir = 0; dir < 2; ++dir) {
    CubicInt w = u;
    for (long k = 1; k <= K_assoc; ++k) {
      w = dir == 0 ? mul_g(w) : mul_g_inv(w);
      consider(w);
      if (max_abs(w) > cutoff_factor * (max_abs(best) + 1)) break;
    }
  }
  return best;
}

}  // namespace q3c
