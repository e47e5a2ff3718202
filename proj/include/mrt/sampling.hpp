#pragma once

#include <cstdint>
#include <vector>

#include "mrt/xray.hpp"

namespace mrt {

/// Points with |x| <= x_radius and |xi| in [xi_min, xi_max], direction uniform.
std::vector<PhasePoint> random_phase_points(int n, int count, std::uint64_t seed,
                                            double x_radius = 1.5, double xi_min = 0.5,
                                            double xi_max = 2.0);

/// Points of T S^{n-1} with |x| <= x_radius.
std::vector<TSPoint> random_ts_points(int n, int count, std::uint64_t seed, double x_radius = 1.5);

}  // namespace mrt
