#include "q3c/thue.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "q3c/errors.hpp"
#include "q3c/forms.hpp"
#include "q3c/parallel.hpp"

namespace q3c {

namespace {

std::optional<ParamPair> pair_from_orbit_member(const CubicInt& u) {
  invariant(u.b == 0, "orbit member must have zero middle coefficient");
  // u = m + n g^2 solves t1(m, n) = norm(u); keep only allowable pairs.
  if (!allowable(u.a, u.c)) return std::nullopt;
  if (gcd(u.a, u.c) != 1) return std::nullopt;  // non-primitive element
  return ParamPair(u.a, u.c);
}

}  // namespace

ThueResult solve_t1(const BigInt& a, const RunConfig& cfg) {
  require(a > 0, "t1 target must be positive");
  ThueResult out;
  out.a = a;

  std::vector<CubicInt> seeds;
  if (a == 1) {
    // The units themselves: one class, represented by 1.
    out.classes.target = a;
    out.classes.complete = true;
    out.classes.representatives.push_back(CubicInt{1, 0, 0});
    seeds.push_back(CubicInt{1, 0, 0});
  } else {
    if (cfg.solver == "box") {
      // Exhaustive coefficient box, doubling while a hit touches the border.
      BigInt box = cfg.box > 0 ? BigInt(cfg.box) : default_box(a);
      for (int attempt = 0;; ++attempt) {
        out.classes = elements_of_norm(a, box);
        if (out.classes.complete || attempt == 2) break;
        box *= 2;
      }
    } else {
      out.classes = elements_of_norm_factored(a, cfg.rho_budget);
      if (!out.classes.complete) {
        // Factorization gave out; fall back to the box search when the box
        // is small enough to finish, else report the incomplete class list.
        BigInt fb = cfg.box > 0 ? BigInt(cfg.box) : default_box(a);
        if (fb <= 5000) out.classes = elements_of_norm(a, fb);
      }
    }
    seeds = out.classes.representatives;
  }

  bool all_certified = out.classes.complete;
  for (CubicInt seed : seeds) {
    BigInt nrm = norm(seed);
    invariant(q3c::abs(nrm) == a, "class representative has wrong norm");
    if (nrm != a) seed = neg(seed);  // flip to norm +a (odd degree)
    ZeroScan zs = zero_scan(seed, cfg.window);
    for (long k : zs.zeros) {
      CubicInt member = mul(seed, g_pow(k));
      if (auto p = pair_from_orbit_member(member)) {
        invariant(eval_t(1, *p) == a, "orbit zero is not a t1 solution");
        out.solutions.push_back(*p);
      }
    }
    // Completeness of this class's zero list: backward by the modular
    // certificate (l = -k), forward by the sign-block closure.
    std::vector<long> M;
    for (long k : zs.zeros) M.push_back(-k);
    std::sort(M.begin(), M.end());
    MTOutcome mt = mt_certify_auto(seed, M, cfg.mt_prime_limit);
    if (mt.ok && zs.forward_closed)
      out.certificates.push_back(mt.cert);
    else
      all_certified = false;
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  invariant(std::adjacent_find(out.solutions.begin(), out.solutions.end()) ==
                out.solutions.end(),
            "distinct orbit zeros produced one pair twice");
  out.status = all_certified ? "certified" : "window-heuristic";
  return out;
}

std::vector<ParamPair> brute_solve_t1(const BigInt& a, const BigInt& H) {
  require(H >= 1, "search height must be positive");
  std::vector<ParamPair> out;
  for (BigInt n = -H; n <= H; ++n) {
    if (n == 0) continue;
    // t1(m, n) = m^3 + 2n m^2 + n^2 m + n^3; solve for integer m.
    for (const BigInt& m : monic_cubic_roots(2 * n, n * n, n * n * n - a)) {
      if (q3c::abs(m) > H) continue;
      if (!allowable(m, n) || gcd(m, n) != 1) continue;
      out.emplace_back(m, n);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ParamPair> solve_A(const BigInt& k) {
  require(k > 0, "A target must be positive");
  std::set<std::pair<BigInt, BigInt>> found;
  // A = s3^2 + 7 (mn(m+n))^2, so each representation k = x^2 + 7 y^2 pins
  // |mn(m+n)| = y; split w = +-y over its divisors m.
  for (const auto& [x, y] : represent_x2_Dy2(k, 7)) {
    (void)x;  // A is rebuilt from (m, n); only y drives the search
    if (y == 0) continue;
    Factorization fy = factorize(y);
    invariant(fy.complete, "divisor split needs a full factorization");
    std::vector<BigInt> divs{1};
    for (const auto& [q, e] : fy.factors) {
      std::vector<BigInt> next;
      BigInt qe = 1;
      for (unsigned i = 0; i <= e; ++i, qe *= q)
        for (const BigInt& d : divs) next.push_back(d * qe);
      divs = std::move(next);
    }
    for (int ws = -1; ws <= 1; ws += 2) {
      BigInt w = ws * y;
      for (const BigInt& d : divs) {
        for (const BigInt& m : {d, BigInt(-d)}) {
          // n(m+n) = w/m  =>  n = (-m +- sqrt(m^2 + 4w/m)) / 2
          BigInt rhs = w / m;
          BigInt disc = m * m + 4 * rhs, root;
          if (disc < 0 || !is_perfect_square(disc, &root)) continue;
          for (int rs = -1; rs <= 1; rs += 2) {
            BigInt num = -m + rs * root;
            if (num % 2 != 0) continue;
            BigInt n = num / 2;
            if (!allowable(m, n) || gcd(m, n) != 1) continue;
            if (eval_A(ParamPair(m, n)) != k) continue;
            found.emplace(m, n);
          }
        }
      }
    }
  }
  std::vector<ParamPair> out;
  for (const auto& [m, n] : found) out.emplace_back(m, n);
  return out;
}

ScanC1Result scan_conjecture1(std::uint64_t k_max, unsigned parallelism) {
  require(k_max >= 1 && k_max <= 10'000'000, "census bound out of range");
  ScanC1Result out;
  out.k_max = k_max;
  // Machine-word mirror of solve_A, driven by y = |mn(m+n)| alone: for every
  // admissible pair with |mn(m+n)| = y, its A lands at s3^2 + 7y^2.
  const std::int64_t y_max = static_cast<std::int64_t>(
      std::max(1.0, std::floor(std::sqrt(static_cast<double>(k_max) / 7.0)) + 1));
  std::vector<std::uint8_t> counts(k_max + 1, 0);
  const unsigned nthreads = effective_threads(parallelism);
  std::vector<std::vector<std::uint8_t>> partial(
      nthreads, std::vector<std::uint8_t>());
  parallel_chunks(1, static_cast<std::uint64_t>(y_max) + 1, nthreads,
                  [&](unsigned chunk, std::uint64_t lo_u, std::uint64_t hi_u) {
    std::vector<std::uint8_t> local(k_max + 1, 0);
    for (auto y = static_cast<std::int64_t>(lo_u);
         y < static_cast<std::int64_t>(hi_u); ++y) {
      if (7 * static_cast<unsigned __int128>(y) * y >
          static_cast<unsigned __int128>(k_max))
        continue;
      std::vector<std::int64_t> divs;
      for (std::int64_t d = 1; d * d <= y; ++d) {
        if (y % d) continue;
        divs.push_back(d);
        if (d != y / d) divs.push_back(y / d);
      }
      for (int ws = -1; ws <= 1; ws += 2) {
        const std::int64_t w = ws * y;
        for (std::int64_t dv : divs) {
          for (int ms = -1; ms <= 1; ms += 2) {
            const std::int64_t m = ms * dv;
            const std::int64_t rhs = w / m;
            const std::int64_t disc = m * m + 4 * rhs;
            if (disc < 0) continue;
            auto rt = static_cast<std::int64_t>(std::sqrt(static_cast<double>(disc)));
            while (rt > 0 && rt * rt > disc) --rt;
            while ((rt + 1) * (rt + 1) <= disc) ++rt;
            if (rt * rt != disc) continue;
            for (int rs = -1; rs <= 1; rs += 2) {
              if (rt == 0 && rs < 0) continue;  // double root: count n once
              const std::int64_t num = -m + rs * rt;
              if (num % 2 != 0) continue;
              const std::int64_t n = num / 2;
              if (n == 0 || m + n == 0) continue;
              if (std::gcd(m, n) != 1) continue;
              // s3 = m^3 + m^2 n - 2 m n^2 - n^3; |m|,|n| <= 2y < 2^21, so
              // 128-bit intermediates cannot overflow.
              const __int128 mm = m, nn = n;
              const __int128 s3 =
                  mm * mm * mm + mm * mm * nn - 2 * mm * nn * nn - nn * nn * nn;
              const __int128 A = s3 * s3 + 7 * static_cast<__int128>(y) * y;
              if (A > static_cast<__int128>(k_max)) continue;
              auto ka = static_cast<std::uint64_t>(A);
              if (local[ka] < 250) ++local[ka];
            }
          }
        }
      }
    }
    partial[chunk] = std::move(local);
  });
  for (const auto& local : partial) {
    if (local.empty()) continue;
    for (std::uint64_t k = 0; k <= k_max; ++k) {
      unsigned s = counts[k] + local[k];
      counts[k] = static_cast<std::uint8_t>(std::min(s, 250u));
    }
  }
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    if (counts[k] == 0) continue;
    if (counts[k] == 6)
      ++out.k_with_solutions;
    else
      out.counterexamples.push_back(k);
  }
  return out;
}

}  // namespace q3c
