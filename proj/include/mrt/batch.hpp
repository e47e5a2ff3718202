#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mrt/xray.hpp"

namespace mrt {

// Point-batch kernels. Each has an OpenMP version and a serial reference
// with identical per-point arithmetic, so results agree bit for bit.

/// out[k] = fn(k) for k in [0, count), evaluated in parallel. `fn` must be
/// safe to call concurrently.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn) {
  std::vector<T> out(count);
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = fn(static_cast<std::size_t>(k));
  return out;
}

template <class T, class Fn>
std::vector<T> serial_map(std::size_t count, Fn&& fn) {
  std::vector<T> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = fn(k);
  return out;
}

std::vector<cplx> evaluate_batch(const TransformRep& rep, std::span<const PhasePoint> points);
std::vector<cplx> evaluate_batch_serial(const TransformRep& rep, std::span<const PhasePoint> points);

/// Values of several reps at the same points, rep-major: out[r][k].
std::vector<std::vector<cplx>> evaluate_many(std::span<const TransformRep> reps,
                                             std::span<const PhasePoint> points);
std::vector<std::vector<cplx>> evaluate_many_serial(std::span<const TransformRep> reps,
                                                    std::span<const PhasePoint> points);

/// Number of OpenMP worker threads available to the kernels.
int worker_threads();

}  // namespace mrt
