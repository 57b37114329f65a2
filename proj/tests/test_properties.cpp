#include <doctest.h>

#include "property_suites.hpp"

using namespace toric;

TEST_CASE("hausdorff metric axioms hold on random clouds") {
  props::SuiteResult r = props::hausdorff_axioms(0x5eed0001, 120);
  CHECK(r.instances == 120);
  INFO(r.first_failure);
  CHECK(r.failures == 0);
}

TEST_CASE("model spectrum is independent of the anchoring vertex") {
  props::SuiteResult r = props::vertex_choice_invariance(0x5eed0002, 120);
  CHECK(r.instances == 120);
  INFO(r.first_failure);
  CHECK(r.failures == 0);
}

TEST_CASE("validation and counts are unimodular invariants") {
  props::SuiteResult r = props::unimodular_stability(0x5eed0003, 120);
  CHECK(r.instances == 120);
  INFO(r.first_failure);
  CHECK(r.failures == 0);
}

TEST_CASE("reconstruction is deterministic and lands on the ground truth") {
  props::SuiteResult r = props::reconstruction_determinism(0x5eed0004, 110);
  CHECK(r.instances == 110);
  INFO(r.first_failure);
  CHECK(r.failures == 0);
}
