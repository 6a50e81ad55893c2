#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "q3c/cubic.hpp"
#include "q3c/errors.hpp"
#include "q3c/norm_solver.hpp"

using namespace q3c;

TEST_CASE("cubic_roots_mod") {
  CHECK(cubic_roots_mod(2).empty());
  CHECK(cubic_roots_mod(3).empty());
  CHECK(cubic_roots_mod(5) == std::vector<BigInt>{2});
  CHECK(cubic_roots_mod(7) == std::vector<BigInt>{5});
  CHECK(cubic_roots_mod(23) == std::vector<BigInt>{3, 10});
  CHECK(cubic_roots_mod(59) == std::vector<BigInt>{4, 13, 42});
  for (const BigInt& q : {BigInt(101), BigInt(173), BigInt(1753),
                          BigInt("1000000007"),
                          BigInt("2305843009213693951")}) {  // 2^61 - 1
    auto roots = cubic_roots_mod(q);
    std::set<BigInt> dedup(roots.begin(), roots.end());
    CHECK(dedup.size() == roots.size());
    for (const BigInt& r : roots) {
      CHECK(r >= 0);
      CHECK(r < q);
      CHECK((r * r * r - r - 1) % q == 0);
    }
  }
  CHECK(cubic_roots_mod(101).size() == 3);
  CHECK(cubic_roots_mod(173).size() == 3);
  CHECK_THROWS_AS(cubic_roots_mod(6), domain_error);
}

TEST_CASE("ideal_generator") {
  for (auto [q, r] : {std::pair<long, long>{59, 4},
                      {59, 13},
                      {59, 42},
                      {101, 0},
                      {5, 2},
                      {7, 5}}) {
    BigInt Q(q);
    BigInt R = r == 0 ? cubic_roots_mod(Q)[0] : BigInt(r);
    CubicInt gen = ideal_generator(Q, R);
    CHECK(q3c::abs(norm(gen)) == Q);
    // Membership in the lattice {a + b g + c g^2 : a + b R + c R^2 == 0 mod q}.
    CHECK((gen.a + gen.b * R + gen.c * R * R) % Q == 0);
  }
  CHECK_THROWS_AS(ideal_generator(59, 5), domain_error);  // 5 is not a root
}

TEST_CASE("box search at small norms") {
  NormClass one = elements_of_norm(1);
  CHECK(one.representatives.empty());
  CHECK(one.complete);

  NormClass c23 = elements_of_norm(23);
  CHECK(c23.complete);
  CHECK(c23.representatives.size() == 2);  // (23) = p1 p2^2, both of norm 23
  for (const CubicInt& u : c23.representatives)
    CHECK(q3c::abs(norm(u)) == 23);

  // 29 is inert: no elements of norm 29 at all.
  NormClass c29 = elements_of_norm(29);
  CHECK(c29.complete);
  CHECK(c29.representatives.empty());
}

TEST_CASE("factored enumeration agrees with the box search") {
  for (long a : {1,  5,  7,  11, 17, 19, 23, 25, 29, 35,  43,  59,
                 61, 85, 209, 211, 307, 449, 575, 631, 883, 1451, 3599,
                 2,  3,  4,  6,  9,  10, 12, 46, 115, 529}) {
    NormClass fac = elements_of_norm_factored(a);
    NormClass box = elements_of_norm(a, 60);
    CHECK(fac.complete);
    INFO("a = ", a);
    CHECK(fac.representatives == box.representatives);
    std::set<CubicInt> dedup(fac.representatives.begin(),
                             fac.representatives.end());
    CHECK(dedup.size() == fac.representatives.size());
    for (const CubicInt& u : fac.representatives) {
      CHECK(q3c::abs(norm(u)) == a);
      CHECK(canonical_associate(u) == u);
    }
    for (size_t i = 0; i < fac.representatives.size(); ++i)
      for (size_t j = i + 1; j < fac.representatives.size(); ++j)
        CHECK_FALSE(
            is_associate(fac.representatives[i], fac.representatives[j]).ok);
  }
}

TEST_CASE("factored enumeration: primitivity and prime powers") {
  // 4 = 2^2: 2 is inert, so the only ideals of norm 4 would be (2)-divisible
  // and imprimitive; also no element of norm 2 exists.
  CHECK(elements_of_norm_factored(2).representatives.empty());
  CHECK(elements_of_norm_factored(4).representatives.empty());

  // 23^2: p1^2, p1 p2 (p2^2 = (23)/p1 gives the imprimitive (23) itself
  // only when combined as p1 p2^2).
  NormClass c529 = elements_of_norm_factored(529);
  CHECK(c529.complete);
  for (const CubicInt& u : c529.representatives) {
    CHECK(q3c::abs(norm(u)) == 529);
    // Primitive: not divisible by the rational prime 23.
    CHECK_FALSE((u.a % 23 == 0 && u.b % 23 == 0 && u.c % 23 == 0));
  }

  // 5 * 23 = 115: one split class at 5 times two classes at 23.
  NormClass c115 = elements_of_norm_factored(115);
  CHECK(c115.representatives.size() ==
        elements_of_norm(115, 60).representatives.size());

  // Rational-cube norms are where the two strategies legitimately differ:
  // the literal box search sees the imprimitive element 2 (norm 8) and
  // 5 (norm 125), the factoring path reports primitive classes only.
  NormClass box8 = elements_of_norm(8, 30);
  REQUIRE(box8.representatives.size() == 1);
  CHECK(box8.representatives[0] == canonical_associate(CubicInt{2, 0, 0}));
  CHECK(elements_of_norm_factored(8).representatives.empty());

  NormClass box125 = elements_of_norm(125, 30);
  NormClass fac125 = elements_of_norm_factored(125);
  CHECK(fac125.representatives.size() == 1);   // p1^3 at the 1-root prime 5
  CHECK(box125.representatives.size() == 2);   // plus the class of 5 itself
  for (const CubicInt& u : fac125.representatives) {
    bool div5 = u.a % 5 == 0 && u.b % 5 == 0 && u.c % 5 == 0;
    CHECK_FALSE(div5);
  }
}

TEST_CASE("default_box grows with the target") {
  CHECK(default_box(1) == 50);
  CHECK(default_box(307) >= 4 * 6);
  CHECK(default_box(BigInt("1000000000")) >= 4000);
}

TEST_CASE("solver rejects nonpositive targets") {
  CHECK_THROWS_AS(elements_of_norm(0), domain_error);
  CHECK_THROWS_AS(elements_of_norm(-5), domain_error);
  CHECK_THROWS_AS(elements_of_norm_factored(0), domain_error);
}
