#include "mrt/batch.hpp"

#include <omp.h>

namespace mrt {

std::vector<cplx> evaluate_batch(const TransformRep& rep, std::span<const PhasePoint> points) {
  return parallel_map<cplx>(points.size(), [&](std::size_t k) { return rep.evaluate(points[k]); });
}

std::vector<cplx> evaluate_batch_serial(const TransformRep& rep, std::span<const PhasePoint> points) {
  return serial_map<cplx>(points.size(), [&](std::size_t k) { return rep.evaluate(points[k]); });
}

std::vector<std::vector<cplx>> evaluate_many(std::span<const TransformRep> reps,
                                             std::span<const PhasePoint> points) {
  const std::size_t np = points.size();
  auto flat = parallel_map<cplx>(reps.size() * np, [&](std::size_t k) {
    return reps[k / np].evaluate(points[k % np]);
  });
  std::vector<std::vector<cplx>> out(reps.size());
  for (std::size_t r = 0; r < reps.size(); ++r) {
    out[r].assign(flat.begin() + static_cast<long>(r * np), flat.begin() + static_cast<long>((r + 1) * np));
  }
  return out;
}

std::vector<std::vector<cplx>> evaluate_many_serial(std::span<const TransformRep> reps,
                                                    std::span<const PhasePoint> points) {
  std::vector<std::vector<cplx>> out(reps.size());
  for (std::size_t r = 0; r < reps.size(); ++r) out[r] = evaluate_batch_serial(reps[r], points);
  return out;
}

int worker_threads() { return omp_get_max_threads(); }

}  // namespace mrt
