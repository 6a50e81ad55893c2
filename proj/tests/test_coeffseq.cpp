#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "q3c/coeffseq.hpp"
#include "q3c/errors.hpp"
#include "test_support.hpp"

using namespace q3c;

TEST_CASE("coeff_seq agrees with direct unit-orbit products") {
  CubicInt pi{3, -2, 5};
  CoeffSeq seq = coeff_seq(pi, -30, 30);
  CHECK(seq.k_min == -30);
  CHECK(seq.b.size() == 61);
  for (long k = -30; k <= 30; ++k) {
    CubicInt member = mul(pi, g_pow(k));
    CHECK(seq.at(k) == member.b);
  }
  CHECK_THROWS_AS((void)seq.at(31), std::out_of_range);
  CHECK_THROWS_AS((void)seq.at(-31), std::out_of_range);
}

TEST_CASE("recurrences in both directions") {
  std::mt19937_64 g(21);
  for (int i = 0; i < 500; ++i) {
    CubicInt pi = q3c_test::random_cubic(g, 40);
    CoeffSeq seq = coeff_seq(pi, -25, 25);
    for (long k = -25; k + 3 <= 25; ++k)
      CHECK(seq.at(k + 3) == seq.at(k + 1) + seq.at(k));
  }
}

TEST_CASE("zero sets of the three recorded seeds") {
  // Seed 1: b_k = 0 exactly at k in {-14,-5,-1,0,2} within any window.
  ZeroScan s1 = zero_scan(CubicInt{1, 0, 0});
  CHECK(s1.zeros == std::vector<long>{-14, -5, -1, 0, 2});
  CHECK(s1.forward_closed);
  CHECK(s1.growth);

  // Seed 2 - g: b_{-1..5} = 0,-1,2,-1,1,1,0; zeros at {-1, 5}.
  CubicInt two_minus_g{2, -1, 0};
  CoeffSeq seq = coeff_seq(two_minus_g, -1, 5);
  CHECK(seq.at(-1) == 0);
  CHECK(seq.at(0) == -1);
  CHECK(seq.at(1) == 2);
  CHECK(seq.at(2) == -1);
  CHECK(seq.at(3) == 1);
  CHECK(seq.at(4) == 1);
  CHECK(seq.at(5) == 0);
  ZeroScan s2 = zero_scan(two_minus_g);
  CHECK(s2.zeros == std::vector<long>{-1, 5});
  CHECK(s2.forward_closed);

  // Seed 2 + g: zeros at {-9, -1}.
  ZeroScan s3 = zero_scan(CubicInt{2, 1, 0});
  CHECK(s3.zeros == std::vector<long>{-9, -1});
  CHECK(s3.forward_closed);
}

TEST_CASE("zero_scan window control") {
  CHECK_THROWS_AS(zero_scan(CubicInt{1, 0, 0}, 10), domain_error);
  ZeroScan wide = zero_scan(CubicInt{1, 0, 0}, 500);
  CHECK(wide.zeros == std::vector<long>{-14, -5, -1, 0, 2});
}

TEST_CASE("three same-sign consecutive terms proves the forward tail") {
  // The forward closure flag is a theorem, not a heuristic: b_{k+3} =
  // b_{k+1} + b_k keeps a strict sign once three consecutive terms share it.
  // Spot-check the propagation explicitly from the window edge.
  CubicInt pi{1, 0, 0};
  CoeffSeq seq = coeff_seq(pi, 150, 400);
  int s = sign(seq.at(150));
  CHECK(s != 0);
  CHECK(sign(seq.at(151)) == s);
  CHECK(sign(seq.at(152)) == s);
  for (long k = 153; k <= 400; ++k) CHECK(sign(seq.at(k)) == s);
}

TEST_CASE("zero scans find solution indices of t1 = a") {
  // For the seed -4 + 7g^2 (norm 307), members with b_k = 0 give pairs.
  CubicInt pi{-4, 0, 7};
  ZeroScan zs = zero_scan(pi);
  CHECK(!zs.zeros.empty());
  for (long k : zs.zeros) {
    CubicInt member = mul(pi, g_pow(k));
    CHECK(member.b == 0);
    CHECK(norm(member) == 307);
  }
}
