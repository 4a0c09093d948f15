#include <doctest.h>

#include <chrono>

#include "property_suite.hpp"

TEST_CASE("engine invariants") {
  const auto start = std::chrono::steady_clock::now();
  const auto t = props::run(20060403);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const auto& f : t.failures) FAIL_CHECK(f);
  CHECK(t.cases >= 500);
  CHECK(secs < 60.0);
  MESSAGE(t.cases << " cases in " << secs << " s");
}

TEST_CASE("engine invariants, second seed") {
  const auto t = props::run(7);
  CHECK(t.failures.empty());
}
