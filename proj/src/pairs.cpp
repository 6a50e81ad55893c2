#include "q3c/pairs.hpp"

namespace q3c {

bool allowable(const BigInt& m, const BigInt& n) {
  return gcd(m, n) == 1 && m != 0 && n != 0 && m + n != 0;
}

ParamPair::ParamPair(BigInt m_, BigInt n_) : m(std::move(m_)), n(std::move(n_)) {
  require(gcd(m, n) == 1,
          "pair (" + to_dec(m) + "," + to_dec(n) + ") is not coprime");
  require(m != 0 && n != 0 && m + n != 0,
          "pair (" + to_dec(m) + "," + to_dec(n) + ") has m*n*(m+n) = 0");
}

ParamPair reduce_pair(const BigInt& m, const BigInt& n) {
  BigInt g = gcd(m, n);
  require(g != 0, "reduce_pair(0,0)");
  return ParamPair(m / g, n / g);
}

ParamPair beta(const ParamPair& p) { return ParamPair(-p.n, p.m + p.n); }

std::array<ParamPair, 6> beta_orbit(const ParamPair& p) {
  std::array<ParamPair, 6> orbit{p, p, p, p, p, p};
  for (int i = 1; i < 6; ++i) orbit[i] = beta(orbit[i - 1]);
  invariant(beta(orbit[5]) == p, "beta does not have order 6");
  return orbit;
}

ParamPair canonical_pair(const ParamPair& p) {
  const ParamPair* found = nullptr;
  auto orbit = beta_orbit(p);
  for (const auto& q : orbit) {
    if (q.m > 0 && q.n > 0) {
      invariant(found == nullptr, "orbit has two all-positive members");
      found = &q;
    }
  }
  invariant(found != nullptr, "orbit has no all-positive member");
  return *found;
}

}  // namespace q3c
