#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "golden/golden_pairs.inc"
#include "q3c/errors.hpp"
#include "q3c/forms.hpp"
#include "test_support.hpp"

using namespace q3c;

TEST_CASE("forms against the recorded table") {
  for (const GoldenPair& row : kGoldenPairs) {
    ParamPair p(big_from(row.m), big_from(row.n));
    CHECK(eval_A(p) == big_from(row.A));
    auto [B, C] = eval_B_C(p);
    CHECK(B == big_from(row.B));
    CHECK(C == big_from(row.C));
    CHECK(eval_t(1, p) == big_from(row.t1));
    CHECK(eval_t(2, p) == big_from(row.t2));
    CHECK(eval_t(3, p) == big_from(row.t3));

    CVal cv = c_of_pair(p);
    CHECK(to_dec(cv.c) == row.c);
    CHECK(cv.A == big_from(row.A));
    CHECK(cv.B == big_from(row.B));
    CHECK(cv.C == big_from(row.C));

    CycleData cd = cycle_of_pair(p);
    CHECK(to_dec(cd.c) == row.c);
    CHECK(to_dec(cd.xs[0]) == row.x1);
    CHECK(to_dec(cd.xs[1]) == row.x2);
    CHECK(to_dec(cd.xs[2]) == row.x3);
    CHECK(cd.numerators[0] == big_from(row.t1));
    CHECK(cd.numerators[1] == big_from(row.t2));
    CHECK(cd.numerators[2] == -big_from(row.t3));
    CHECK(cd.denom == 4 * big_from(row.C));
  }
}

TEST_CASE("cycles close under x -> x^2 + c and avoid fixed points") {
  std::mt19937_64 g(71);
  for (int i = 0; i < 400; ++i) {
    ParamPair p = q3c_test::random_pair(g, 80);
    CycleData cd = cycle_of_pair(p);
    CHECK(cd.xs[1] == cd.xs[0] * cd.xs[0] + cd.c);
    CHECK(cd.xs[2] == cd.xs[1] * cd.xs[1] + cd.c);
    CHECK(cd.xs[0] == cd.xs[2] * cd.xs[2] + cd.c);
    CHECK(cd.xs[0] != cd.xs[1]);
    CHECK(cd.xs[1] != cd.xs[2]);
    CHECK(cd.xs[0] != cd.xs[2]);
    CHECK(cd.c < 0);
    for (const BigRat& x : cd.xs) CHECK(phi3_eval(x, cd.c) == 0);
  }
}

TEST_CASE("A decomposes as s3^2 + 7 (mn(m+n))^2") {
  std::mt19937_64 g(72);
  for (int i = 0; i < 2000; ++i) {
    ParamPair p = q3c_test::random_pair(g, 100);
    BigInt y = p.m * p.n * (p.m + p.n);
    CHECK(eval_A(p) == eval_s3(p) * eval_s3(p) + 7 * y * y);
    CHECK(eval_A(p) > 0);
    CHECK(eval_A(p) % 2 == 1);
  }
}

TEST_CASE("param_t matches the pair parametrization via t = 1 + 2s") {
  auto [x0, c0] = param_t(BigRat(0));
  CHECK(to_dec(x0) == "-7/4");
  CHECK(to_dec(c0) == "-29/16");

  // s = m/n = 1 -> t = 3 reproduces the (1,1) cycle point and c.
  auto [x1, c1] = param_t(BigRat(3));
  CHECK(to_dec(x1) == "5/4");
  CHECK(to_dec(c1) == "-29/16");

  CHECK_THROWS_AS(param_t(BigRat(1)), domain_error);
  CHECK_THROWS_AS(param_t(BigRat(-1)), domain_error);

  std::mt19937_64 g(73);
  for (int i = 0; i < 300; ++i) {
    ParamPair p = q3c_test::random_pair(g, 60);
    BigRat s = make_rat(p.m, p.n);
    if (s == 1 || s == -1) continue;  // poles of the t chart
    BigRat t = 2 * s + 1;
    if (t == 1 || t == -1) continue;
    auto [x, c] = param_t(t);
    CHECK(c == c_of_pair(p).c);
    CHECK(phi3_eval(x, c) == 0);
  }
}

TEST_CASE("phi3_eval is nonzero off the cycle locus") {
  CHECK(phi3_eval(BigRat(0), BigRat(1)) != 0);
  CHECK(phi3_eval(BigRat(1), BigRat(0)) != 0);
  CHECK(phi3_eval(BigRat(5, 4), make_rat(-29, 16)) == 0);
}

TEST_CASE("s_from_triangle") {
  CHECK(s_from_triangle(5, 1, 7) == 1);
  CHECK(to_dec(s_from_triangle(223, 1, 295)) == "4/3");
  CHECK_THROWS_AS(s_from_triangle(1, 1, 1), domain_error);
  CHECK_THROWS_AS(s_from_triangle(3, 2, -3), domain_error);
}

TEST_CASE("pair_from_triangle recovers witnesses") {
  auto p = pair_from_triangle(5, 1, 7);
  REQUIRE(p.has_value());
  CHECK(*p == ParamPair(1, 1));

  auto q = pair_from_triangle(11, 17, 25);
  REQUIRE(q.has_value());
  CHECK(to_dec(c_of_pair(*q).c) == "-421/144");

  CHECK_FALSE(pair_from_triangle(2, 3, 4).has_value());
  CHECK_FALSE(pair_from_triangle(1, 1, 1).has_value());

  // Signs are irrelevant: numerators enter by absolute value.
  auto r = pair_from_triangle(-5, 1, -7);
  REQUIRE(r.has_value());
  CHECK(*r == ParamPair(1, 1));

  std::mt19937_64 g(74);
  for (int i = 0; i < 200; ++i) {
    ParamPair w = q3c_test::random_pair(g, 50);
    auto got = pair_from_triangle(eval_t(1, w), eval_t(2, w), eval_t(3, w));
    REQUIRE(got.has_value());
    CHECK(*got == canonical_pair(w));
  }
}

TEST_CASE("classify_A_value") {
  ClassReport r29 = classify_A_value(29);
  CHECK(r29.conforms);
  CHECK(r29.complete);
  REQUIRE(r29.parts.size() == 1);
  CHECK(r29.parts[0].value == 29);
  CHECK(r29.parts[0].code == '1');

  ClassReport rbig = classify_A_value(49561);  // 29 * 1709
  CHECK(rbig.conforms);
  REQUIRE(rbig.parts.size() == 2);
  CHECK(rbig.parts[0].value == 29);
  CHECK(rbig.parts[1].value == 1709);
  CHECK(rbig.parts[0].code == '1');
  CHECK(rbig.parts[1].code == '1');
  CHECK(rbig.parts[0].value % 7 == 1);
  CHECK(rbig.parts[1].value % 7 == 1);

  ClassReport r7 = classify_A_value(7 * 29);
  CHECK(r7.conforms);
  CHECK(r7.parts[0].code == '7');

  CHECK_FALSE(classify_A_value(15).conforms);      // 3 and 5 are not 1 mod 7
  CHECK_FALSE(classify_A_value(49).conforms);      // 7^2 exceeds the 7-budget
  CHECK_FALSE(classify_A_value(7 * 7 * 29).conforms);
  CHECK(classify_A_value(1).conforms);
  CHECK_THROWS_AS(classify_A_value(0), domain_error);
}

TEST_CASE("classify_t_value") {
  ClassReport r23 = classify_t_value(23);
  CHECK(r23.conforms);
  CHECK(r23.parts[0].code == 'i');

  ClassReport r5 = classify_t_value(5);  // (-23|5) = -1
  CHECK(r5.conforms);
  CHECK(r5.parts[0].code == 'n');

  ClassReport r59 = classify_t_value(59);  // 59 = 6^2 + 23, split prime
  CHECK(r59.conforms);
  CHECK(r59.parts[0].code == 'r');

  CHECK_FALSE(classify_t_value(3).conforms);
  CHECK_FALSE(classify_t_value(13).conforms);
  CHECK_FALSE(classify_t_value(29).conforms);
  CHECK_FALSE(classify_t_value(2).conforms);
  CHECK(classify_t_value(-5).conforms);  // sign is immaterial
  CHECK_THROWS_AS(classify_t_value(0), domain_error);
}

TEST_CASE("cubic_root_count_mod") {
  CHECK(cubic_root_count_mod(2) == 0);
  CHECK(cubic_root_count_mod(5) == 1);
  CHECK(cubic_root_count_mod(7) == 1);
  CHECK(cubic_root_count_mod(23) == 2);  // ramified: double root
  CHECK(cubic_root_count_mod(59) == 3);
  CHECK(cubic_root_count_mod(101) == 3);
  CHECK(cubic_root_count_mod(173) == 3);
  // Exhaustive comparison at small primes.
  for (std::uint32_t q : primes_up_to(200)) {
    int brute = 0;
    for (std::uint32_t x = 0; x < q; ++x)
      if ((static_cast<std::uint64_t>(x) * x % q * x + 2 * q - x - 1) % q == 0)
        ++brute;
    CHECK(cubic_root_count_mod(q) == brute);
  }
}
