#pragma once

/* Shared helpers for the test executables: parsing of the golden-data
 * strings, deterministic random generators, and the property suites run by
 * both test_properties and the acceptance harness. */

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "q3c/coeffseq.hpp"
#include "q3c/cubic.hpp"
#include "q3c/forms.hpp"
#include "q3c/pairs.hpp"

namespace q3c_test {

using namespace q3c;

/* "a,b;c,d" -> {(a,b),(c,d)}; "" -> {}. */
inline std::vector<std::pair<long long, long long>> parse_pair_list(
    const std::string& s) {
  std::vector<std::pair<long long, long long>> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    auto comma = item.find(',');
    out.emplace_back(std::stoll(item.substr(0, comma)),
                     std::stoll(item.substr(comma + 1)));
  }
  return out;
}

inline std::vector<long long> parse_longs(const std::string& s,
                                          char sep = ',') {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(std::stoll(item));
  return out;
}

/* "k:v;k:v" -> {(k,v)}. */
inline std::vector<std::pair<long, long long>> parse_kv_list(
    const std::string& s, char sep = ';') {
  std::vector<std::pair<long, long long>> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    out.emplace_back(std::stol(item.substr(0, colon)),
                     std::stoll(item.substr(colon + 1)));
  }
  return out;
}

inline std::vector<ParamPair> parse_param_pairs(const std::string& s) {
  std::vector<ParamPair> out;
  for (auto [m, n] : parse_pair_list(s))
    out.emplace_back(BigInt(static_cast<long>(m)), BigInt(static_cast<long>(n)));
  return out;
}

inline ParamPair random_pair(std::mt19937_64& g, long h) {
  std::uniform_int_distribution<long> d(-h, h);
  for (;;) {
    BigInt m(d(g)), n(d(g));
    if (allowable(m, n)) return ParamPair(m, n);
  }
}

inline CubicInt random_cubic(std::mt19937_64& g, long h) {
  std::uniform_int_distribution<long> d(-h, h);
  for (;;) {
    CubicInt u{BigInt(d(g)), BigInt(d(g)), BigInt(d(g))};
    if (!u.is_zero()) return u;
  }
}

struct PropertyResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
};

/* Norm identities t1^2-A = 4C t2, t2^2-A = -4C t3, t3^2-A = 4C t1 on every
 * member of the beta orbit. */
inline PropertyResult prop_norm_identity(std::uint64_t cases) {
  PropertyResult r{"norm identities over the beta orbit", cases, 0};
  std::mt19937_64 g(0xA11CE001ULL);
  for (std::uint64_t i = 0; i < cases; ++i) {
    ParamPair p = random_pair(g, 60);
    for (const ParamPair& q : beta_orbit(p))
      if (!norm_identity_check(q)) ++r.failures;
  }
  return r;
}

/* A(beta(p)) = A(p) and the shift t1->t3, t2->-t1, t3->t2 under beta. */
inline PropertyResult prop_beta_invariance(std::uint64_t cases) {
  PropertyResult r{"A invariance and t shifts under beta", cases, 0};
  std::mt19937_64 g(0xA11CE002ULL);
  for (std::uint64_t i = 0; i < cases; ++i) {
    ParamPair p = random_pair(g, 60);
    ParamPair q = beta(p);
    bool ok = eval_A(q) == eval_A(p) && eval_t(1, q) == eval_t(3, p) &&
              eval_t(2, q) == -eval_t(1, p) && eval_t(3, q) == eval_t(2, p);
    if (!ok) ++r.failures;
  }
  return r;
}

/* |t1|, |t2|, |t3| are odd and pairwise coprime. */
inline PropertyResult prop_coprime_numerators(std::uint64_t cases) {
  PropertyResult r{"numerators odd and pairwise coprime", cases, 0};
  std::mt19937_64 g(0xA11CE003ULL);
  for (std::uint64_t i = 0; i < cases; ++i) {
    ParamPair p = random_pair(g, 60);
    BigInt t1 = eval_t(1, p), t2 = eval_t(2, p), t3 = eval_t(3, p);
    bool ok = t1 % 2 != 0 && t2 % 2 != 0 && t3 % 2 != 0 &&
              gcd(t1, t2) == 1 && gcd(t1, t3) == 1 && gcd(t2, t3) == 1;
    if (!ok) ++r.failures;
  }
  return r;
}

/* Prime classes of A: at most one factor 7, all other primes == 1 (mod 7);
 * equivalently A = 7^a (14b + 1) with a <= 1. */
inline PropertyResult prop_A_class(std::uint64_t cases) {
  PropertyResult r{"factor classes of the form A", cases, 0};
  std::mt19937_64 g(0xA11CE004ULL);
  for (std::uint64_t i = 0; i < cases; ++i) {
    ParamPair p = random_pair(g, 30);
    BigInt A = eval_A(p);
    BigInt core = A % 7 == 0 ? A / 7 : A;
    bool ok = core % 7 != 0 && core % 14 == 1;
    ClassReport rep = classify_A_value(A);
    ok = ok && rep.complete && rep.conforms;
    if (!ok) ++r.failures;
  }
  return r;
}

/* Prime classes of the t_i; in particular 2, 3, 13, 29 never divide. */
inline PropertyResult prop_t_class(std::uint64_t cases) {
  PropertyResult r{"factor classes of the forms t1,t2,t3", cases, 0};
  std::mt19937_64 g(0xA11CE005ULL);
  for (std::uint64_t i = 0; i < cases; ++i) {
    ParamPair p = random_pair(g, 30);
    bool ok = true;
    for (int t = 1; t <= 3; ++t) {
      BigInt v = eval_t(t, p);
      ok = ok && v % 2 != 0 && v % 3 != 0 && v % 13 != 0 && v % 29 != 0;
      ClassReport rep = classify_t_value(v);
      ok = ok && rep.complete && rep.conforms;
    }
    if (!ok) ++r.failures;
  }
  return r;
}

inline PropertyResult prop_norm_multiplicative(std::uint64_t cases) {
  PropertyResult r{"norm multiplicativity in Z[g]", cases, 0};
  std::mt19937_64 g(0xA11CE006ULL);
  for (std::uint64_t i = 0; i < cases; ++i) {
    CubicInt u = random_cubic(g, 50), v = random_cubic(g, 50);
    if (norm(mul(u, v)) != norm(u) * norm(v)) ++r.failures;
  }
  return r;
}

/* b_{k+3} = b_{k+1} + b_k forward and bt_l = bt_{l-3} - bt_{l-1} backward. */
inline PropertyResult prop_recurrence(std::uint64_t cases) {
  PropertyResult r{"coefficient-sequence recurrences", cases, 0};
  std::mt19937_64 g(0xA11CE007ULL);
  for (std::uint64_t i = 0; i < cases; ++i) {
    CubicInt pi = random_cubic(g, 25);
    CoeffSeq seq = coeff_seq(pi, -12, 12);
    bool ok = true;
    for (long k = -12; k + 3 <= 12; ++k)
      ok = ok && seq.at(k + 3) == seq.at(k + 1) + seq.at(k);
    for (long l = -9; l + 3 <= 12; ++l)  // bt_l = b_{-l}
      ok = ok && seq.at(-l) == seq.at(-(l - 3)) - seq.at(-(l - 1));
    if (!ok) ++r.failures;
  }
  return r;
}

inline std::vector<PropertyResult> run_property_suites(std::uint64_t cases) {
  return {prop_norm_identity(cases),      prop_beta_invariance(cases),
          prop_coprime_numerators(cases), prop_A_class(cases),
          prop_t_class(cases),            prop_norm_multiplicative(cases),
          prop_recurrence(cases)};
}

}  // namespace q3c_test
