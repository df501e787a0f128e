#include <catch_amalgamated.hpp>

#include "reltrace/errors.hpp"
#include "reltrace/laws.hpp"

using namespace reltrace;

TEST_CASE("every law suite holds") {
  for (const char* suite : {"info", "tuple", "cka", "lattice"}) {
    for (std::uint64_t seed : {1u, 2u}) {
      LawConfig config;
      config.seed = seed;
      config.cases = 200;
      const auto results = run_law_suite(suite, config);
      CHECK_FALSE(results.empty());
      for (const LawResult& r : results) {
        INFO(r.suite << ": " << r.law << ": " << r.counterexample);
        CHECK(r.holds);
        CHECK(r.suite == suite);
      }
    }
  }
}

TEST_CASE("suites are reproducible") {
  LawConfig config;
  config.cases = 30;
  const auto a = run_law_suite("all", config);
  const auto b = run_law_suite("all", config);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].law == b[i].law);
    CHECK(a[i].cases == b[i].cases);
  }
  CHECK_THROWS_AS(run_law_suite("nonsense", config), ValidationError);
}
