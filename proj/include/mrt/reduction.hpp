#pragma once

#include <span>
#include <vector>

#include "mrt/gaussfield.hpp"
#include "mrt/xray.hpp"

namespace mrt {

/// psi_I = (-1)^m/m! sigma(I) sum_k 1/(m-k)! d^m/dx^{i_1..i_k} dxi^{i_{k+1}..i_m} <xi,d_x>^{m-k} psi^m
/// for a 0-based target tuple I of length m.
TransformRep reduce_via_transport(const TransformRep& psi_m, const std::vector<int>& target);

/// psi_I = 1/m! sigma(I) sum_k (-1)^k C(m,k) d^m psi^k / dx^{i_1..i_k} dxi^{i_{k+1}..i_m}
/// from the tuple psi^0..psi^m (m = psi.size() - 1).
TransformRep reduce_via_tuple(std::span<const TransformRep> psi, const std::vector<int>& target);

/// psi^0..psi^m = J^0 f .. J^m f.
std::vector<TransformRep> transform_tuple(const GaussField& f);

/// xi^{power} * rep.
TransformRep multiply_xi_monomial(const TransformRep& rep, const std::vector<int>& power);

/// Relative residuals (divided by max(1, max|psi_I|)) of the properties of a
/// reduced function.
struct ReductionProperties {
  /// value(x, t xi) = value(x, xi)/|t|
  double homogeneity = 0.0;
  /// <xi,d_x> psi_I = 0
  double transport = 0.0;
  /// <xi,d_x> psi_I = (-1)^m/(m!)^2 d^m/dxi^I <xi,d_x>^{m+1} psi^m, both sides evaluated
  double transport_corollary = 0.0;
  /// J_ij psi_I = 0 for all i < j
  double john = 0.0;
};

ReductionProperties check_reduction_properties(const TransformRep& reduced, const TransformRep& psi_m,
                                               const std::vector<int>& target,
                                               std::span<const PhasePoint> points);

/// Largest relative disagreement between the two reduction formulas over all
/// sorted targets, and between permuted targets.
struct ReductionComparison {
  double equivalence = 0.0;
  double symmetry = 0.0;
};
ReductionComparison compare_reductions(const GaussField& f, std::span<const PhasePoint> points);

/// Recovery of J^k f from the reduced functions, each as a relative residual.
struct RecoveryReport {
  /// psi_I (tuple formula) against J^0 f_I
  double component_via_tuple = 0.0;
  /// psi_I (transport formula) against J^0 f_I
  double component_via_transport = 0.0;
  /// d^k J^k f/dx^J against sigma(J) sum_p a(m,k,p) d^k psi^p/dx^{j_1..j_p}dxi^{j_{p+1}..j_k}
  double coefficient_sum = 0.0;
  /// d^k J^k f/dx^J against (-1)^m/m! sum_l k!/(k+l-m)! C(m,l) <xi,d_x>^l d^k psi^l/dxi^J
  double transport_sum = 0.0;
  /// d^k J^k f/dx^J against xi^I d^k psi_I/dxi^J summed over I
  double contracted_reduction = 0.0;
  /// Lift of the data I^k f against J^k f
  double lift = 0.0;
};

RecoveryReport check_recovery(const GaussField& f, std::span<const PhasePoint> points);

}  // namespace mrt
