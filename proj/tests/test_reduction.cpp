#include "doctest.h"
#include "mrt/reduction.hpp"
#include "mrt/sampling.hpp"

#include <cmath>

using namespace mrt;

TEST_CASE("rank zero reductions are the identity") {
  const GaussField f = random_field(0, 3, 1);
  const auto psi = transform_tuple(f);
  const auto pts = random_phase_points(3, 10, 2);
  const TransformRep a = reduce_via_transport(psi[0], {});
  const TransformRep b = reduce_via_tuple(psi, {});
  for (const auto& p : pts) {
    CHECK(a.evaluate(p) == psi[0].evaluate(p));
    CHECK(b.evaluate(p) == psi[0].evaluate(p));
  }
}

TEST_CASE("rank one reduction expands to xi-derivative minus x-derivative") {
  const GaussField f = random_field(1, 3, 3);
  const auto psi = transform_tuple(f);
  const auto pts = random_phase_points(3, 10, 4);
  for (int i = 0; i < 3; ++i) {
    const TransformRep a = reduce_via_transport(psi[1], {i});
    const TransformRep hand = derive(psi[0], {}, {i}) - derive(psi[1], {i}, {});
    for (const auto& p : pts) CHECK(std::abs(a.evaluate(p) - hand.evaluate(p)) < 1e-11);
  }
}

TEST_CASE("the two reduction formulas agree and are symmetric") {
  for (int m = 0; m <= 2; ++m) {
    const ReductionComparison c = compare_reductions(random_field(m, 3, 10 + m), random_phase_points(3, 50, 5));
    CHECK(c.equivalence < 1e-10);
    CHECK(c.symmetry < 1e-10);
  }
}

TEST_CASE("reduced functions are homogeneous, transport-invariant and John-annihilated") {
  for (int m = 0; m <= 2; ++m) {
    const GaussField f = random_field(m, 3, 20 + m);
    const auto psi = transform_tuple(f);
    const auto pts = random_phase_points(3, 20, 6);
    for (const auto& idx : enumerate_indices(m, 3)) {
      const std::vector<int> target(idx.indices().begin(), idx.indices().end());
      const TransformRep red = reduce_via_transport(psi.back(), target);
      const ReductionProperties r = check_reduction_properties(red, psi.back(), target, pts);
      CHECK(r.homogeneity < 1e-10);
      CHECK(r.transport < 1e-10);
      CHECK(r.transport_corollary < 1e-10);
      CHECK(r.john < 1e-9);
    }
  }
}

TEST_CASE("recovery of the transforms from the reduced functions") {
  for (int m = 0; m <= 2; ++m) {
    const RecoveryReport r = check_recovery(random_field(m, 3, 30 + m), random_phase_points(3, 30, 7));
    CAPTURE(m);
    CHECK(r.component_via_tuple < 1e-9);
    CHECK(r.component_via_transport < 1e-9);
    CHECK(r.coefficient_sum < 1e-9);
    CHECK(r.transport_sum < 1e-9);
    CHECK(r.contracted_reduction < 1e-9);
    CHECK(r.lift < 1e-11);
  }
}

TEST_CASE("reduction of data outside the range is not John-annihilated") {
  // psi^1 built from an unrelated field breaks the tuple consistency
  const GaussField f = random_field(1, 3, 40), g = random_field(1, 3, 41);
  std::vector<TransformRep> psi{TransformRep::transform(0, f), TransformRep::transform(1, g)};
  const auto pts = random_phase_points(3, 20, 8);
  const TransformRep red = reduce_via_tuple(psi, {0});
  const ReductionProperties r = check_reduction_properties(red, psi.back(), {0}, pts);
  CHECK(r.transport > 1e-4);
}
