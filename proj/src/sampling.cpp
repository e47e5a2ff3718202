#include "mrt/sampling.hpp"

#include <cmath>
#include <random>

namespace mrt {

namespace {

Vec unit_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec v(static_cast<std::size_t>(n));
  double len = 0.0;
  do {
    for (auto& c : v) c = g(rng);
    len = norm(v);
  } while (len < 1e-3);
  for (auto& c : v) c /= len;
  return v;
}

Vec ball_vector(int n, double radius, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Vec v = unit_vector(n, rng);
  const double r = radius * std::pow(u(rng), 1.0 / n);
  for (auto& c : v) c *= r;
  return v;
}

}  // namespace

std::vector<PhasePoint> random_phase_points(int n, int count, std::uint64_t seed, double x_radius,
                                            double xi_min, double xi_max) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> len(xi_min, xi_max);
  std::vector<PhasePoint> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    Vec x = ball_vector(n, x_radius, rng);
    Vec xi = unit_vector(n, rng);
    const double s = len(rng);
    for (auto& c : xi) c *= s;
    pts.push_back({std::move(x), std::move(xi)});
  }
  return pts;
}

std::vector<TSPoint> random_ts_points(int n, int count, std::uint64_t seed, double x_radius) {
  std::mt19937_64 rng(seed);
  std::vector<TSPoint> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    Vec xi = unit_vector(n, rng);
    Vec x = ball_vector(n, x_radius, rng);
    const double c = dot(x, xi);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * xi[i];
    pts.push_back(TSPoint::make(std::move(x), std::move(xi)));
  }
  return pts;
}

}  // namespace mrt
