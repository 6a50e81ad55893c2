#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

TEST_CASE("randomized invariant suites") {
  auto results = q3c_test::run_property_suites(10000);
  REQUIRE(results.size() == 7);
  for (const auto& r : results) {
    INFO(r.name, ": ", r.cases, " cases");
    CHECK(r.cases >= 10000);
    CHECK(r.failures == 0);
    MESSAGE(r.name, ": ", r.cases, " cases, ", r.failures, " failures");
  }
}
