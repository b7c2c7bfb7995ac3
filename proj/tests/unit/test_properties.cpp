#include "doctest.h"
#include "support/properties.hpp"

using namespace testing_support;

namespace {

void check(const PropertyResult& r) {
  INFO(r.counterexample.value_or(""));
  CHECK(r.ok());
  CHECK(r.cases >= kPropertyCases);
}

}  // namespace

TEST_CASE("monzo round trip") { check(monzo_round_trip(1)); }
TEST_CASE("monzo multiplicativity") { check(monzo_multiplicativity(2)); }
TEST_CASE("composition telescopes") { check(composition_telescopes(3)); }
TEST_CASE("congruence is an equivalence") { check(congruence_is_equivalence(4)); }
TEST_CASE("equal-tempered transposition keeps congruence") { check(et_transposition_congruence(5)); }
TEST_CASE("mean proportional") { check(mean_proportional(6)); }
TEST_CASE("division frequency bridge") { check(division_frequency_bridge(7)); }
