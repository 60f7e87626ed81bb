#include <doctest.h>

#include "properties.hpp"

using namespace hmcg;

namespace {

void expect(const props::SuiteResult& r) {
  CHECK(r.trials > 0);
  CHECK(r.passed == r.trials);
  for (const auto& f : r.failures) MESSAGE(f);
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("random inner automorphisms are detected") {
  expect(props::inner_detection(5, 200, 11));
  expect(props::inner_detection(7, 200, 12));
}

TEST_CASE("form sign follows orientation") {
  expect(props::form_parity(2, 100, 21));
  expect(props::form_parity(3, 100, 22));
}

TEST_CASE("random smith decompositions") { expect(props::smith_random(100, 31)); }

TEST_CASE("single corruptions are caught") {
  expect(props::corruption_sensitivity(2));
  expect(props::corruption_sensitivity(3));
}

}
