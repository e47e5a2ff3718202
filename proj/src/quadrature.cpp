#include "mrt/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace mrt {

namespace {

// Golub-Welsch for the initial nodes, then Newton polishing on the
// orthonormal Hermite recurrence; weights from the derivative at the node.
GaussHermiteRule build_rule(int n) {
  GaussHermiteRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (n == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = std::sqrt(std::numbers::pi);
    return rule;
  }
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (int j = 1; j < n; ++j) sub[j - 1] = std::sqrt(0.5 * j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd guess = solver.eigenvalues();

  const double pim4 = std::pow(std::numbers::pi, -0.25);
  for (int k = 0; k < n; ++k) {
    double z = guess[k];
    double deriv = 1.0;
    for (int iter = 0; iter < 8; ++iter) {
      double p1 = pim4, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
      }
      deriv = std::sqrt(2.0 * n) * p2;
      const double step = p1 / deriv;
      z -= step;
      if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(z))) break;
    }
    double p1 = pim4, p2 = 0.0;
    for (int j = 1; j <= n; ++j) {
      const double p3 = p2;
      p2 = p1;
      p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
    }
    deriv = std::sqrt(2.0 * n) * p2;
    rule.nodes[k] = z;
    rule.weights[k] = 2.0 / (deriv * deriv);
  }
  // Enforce exact mirror symmetry of the rule.
  for (int k = 0; k < n / 2; ++k) {
    const double z = 0.5 * (rule.nodes[n - 1 - k] - rule.nodes[k]);
    const double w = 0.5 * (rule.weights[n - 1 - k] + rule.weights[k]);
    rule.nodes[k] = -z;
    rule.nodes[n - 1 - k] = z;
    rule.weights[k] = rule.weights[n - 1 - k] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

std::array<GaussHermiteRule, kMaxHermiteNodes> build_all() {
  std::array<GaussHermiteRule, kMaxHermiteNodes> all;
  for (int n = 1; n <= kMaxHermiteNodes; ++n) all[n - 1] = build_rule(n);
  return all;
}

}  // namespace

const GaussHermiteRule& gauss_hermite(int n) {
  if (n < 1 || n > kMaxHermiteNodes) {
    throw std::domain_error("Gauss-Hermite rule size " + std::to_string(n) + " unsupported");
  }
  static const auto table = build_all();
  return table[n - 1];
}

}  // namespace mrt
