#pragma once

#include <vector>

namespace mrt {

/// Gauss-Hermite rule for the weight exp(-s^2) on the real line. An N-node
/// rule integrates polynomials of degree <= 2N-1 exactly.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline constexpr int kMaxHermiteNodes = 100;

/// Cached rule with `n` nodes, 1 <= n <= kMaxHermiteNodes. Rules are built
/// once on first use and shared read-only between threads.
const GaussHermiteRule& gauss_hermite(int n);

/// Smallest rule that is exact for polynomial degree `degree`.
inline int hermite_nodes_for_degree(int degree) { return degree < 0 ? 1 : (degree + 2) / 2; }

}  // namespace mrt
