// OpenMP kernels against their serial references on identical inputs.

#include <benchmark/benchmark.h>

#include "mrt/batch.hpp"
#include "mrt/johnop.hpp"
#include "mrt/lift.hpp"
#include "mrt/sampling.hpp"

using namespace mrt;

namespace {

// Third-order mixed derivative of J^2 f, the typical load of a range check.
// (A John chain would not do: the chain of length m+1 cancels to zero.)
const TransformRep& chain_rep() {
  static const TransformRep rep = derive(TransformRep::transform(2, random_field(2, 3, 1)), {0, 1}, {2});
  return rep;
}

void BM_EvaluateBatch(benchmark::State& state) {
  const auto pts = random_phase_points(3, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_batch(chain_rep(), pts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_EvaluateBatchSerial(benchmark::State& state) {
  const auto pts = random_phase_points(3, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_batch_serial(chain_rep(), pts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

// Finite-difference John operator on the lift of sampled data.
template <bool Parallel>
void BM_LiftedFd(benchmark::State& state) {
  const MomentumDataSet data = MomentumDataSet::from_field(random_field(1, 3, 3));
  const PhaseFn psi = lifted(data, 1);
  const auto pts = random_phase_points(3, static_cast<int>(state.range(0)), 4);
  auto one = [&](std::size_t k) { return john_apply_fd(psi, 0, 1, pts[k].x, pts[k].xi, kDefaultStep); };
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(parallel_map<cplx>(pts.size(), one));
    } else {
      benchmark::DoNotOptimize(serial_map<cplx>(pts.size(), one));
    }
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_EvaluateBatch)->Arg(64)->Arg(512)->UseRealTime();
BENCHMARK(BM_EvaluateBatchSerial)->Arg(64)->Arg(512)->UseRealTime();
BENCHMARK(BM_LiftedFd<true>)->Name("BM_LiftedFd")->Arg(64)->Arg(512)->UseRealTime();
BENCHMARK(BM_LiftedFd<false>)->Name("BM_LiftedFdSerial")->Arg(64)->Arg(512)->UseRealTime();

BENCHMARK_MAIN();
