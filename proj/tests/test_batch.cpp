#include "doctest.h"
#include "mrt/batch.hpp"
#include "mrt/sampling.hpp"

using namespace mrt;

TEST_CASE("parallel and serial kernels agree exactly") {
  const GaussField f = random_field(2, 3, 12);
  const TransformRep r = derive(TransformRep::transform(2, f), {0, 1}, {2});
  const auto pts = random_phase_points(3, 64, 13);
  CHECK(evaluate_batch(r, pts) == evaluate_batch_serial(r, pts));
  std::vector<TransformRep> reps{r, TransformRep::transform(0, f), transport(r)};
  CHECK(evaluate_many(reps, pts) == evaluate_many_serial(reps, pts));
  CHECK(worker_threads() >= 1);
}

TEST_CASE("empty inputs") {
  const TransformRep r(3);
  CHECK(evaluate_batch(r, std::vector<PhasePoint>{}).empty());
  CHECK(evaluate_many(std::vector<TransformRep>{}, random_phase_points(3, 4, 1)).empty());
}
