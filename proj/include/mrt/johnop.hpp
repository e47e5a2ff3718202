#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mrt/gaussfield.hpp"
#include "mrt/lift.hpp"
#include "mrt/xray.hpp"

namespace mrt {

/// Product J_{i_1 j_1} ... J_{i_L j_L} of John operators (0-based indices).
/// Pairs are stored with i < j in lexicographic order; swapped pairs flip
/// `sign`, and any pair with i == j makes the chain the zero operator.
class JohnChain {
 public:
  JohnChain() = default;
  explicit JohnChain(const std::vector<std::pair<int, int>>& pairs);

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  int sign() const { return sign_; }
  bool is_zero() const { return zero_; }
  int length() const { return length_; }
  std::string to_string() const;

 private:
  std::vector<std::pair<int, int>> pairs_;
  int sign_ = 1;
  bool zero_ = false;
  int length_ = 0;
};

/// d^2/dx^i dxi^j - d^2/dx^j dxi^i on the exact backend.
TransformRep john_apply_exact(const TransformRep& rep, int i, int j);
TransformRep john_apply_chain(const TransformRep& rep, const JohnChain& chain);

/// Multisets of `length` pairs i < j, non-decreasing in lexicographic order,
/// truncated to the first `cap` chains.
std::vector<JohnChain> enumerate_canonical_chains(int n, int length, std::size_t cap = 100);

inline constexpr double kDefaultStep = 1e-3;
inline constexpr int kMaxFdChain = 3;

/// J_ij psi at (x, xi) with a 4-point central stencil per mixed derivative.
cplx john_apply_fd(const PhaseFn& psi, int i, int j, std::span<const double> x,
                   std::span<const double> xi, double h = kDefaultStep);

/// Nested central differences for a whole chain; throws std::domain_error when
/// the chain is longer than `max_length`.
cplx john_chain_fd(const PhaseFn& psi, const JohnChain& chain, std::span<const double> x,
                   std::span<const double> xi, double h = kDefaultStep, int max_length = kMaxFdChain);

struct ResidualReport {
  double max_abs = 0.0;
  double rms = 0.0;
  /// max_abs / (max(1, max|psi|) * max(1, derivative scale))
  double relative = 0.0;
  std::vector<double> per_point;
};

/// Chain applied to psi on the exact backend. The derivative scale is the
/// largest magnitude of the same-order derivative without antisymmetrization,
/// prod_t d^2/dx^{i_t} dxi^{j_t} psi.
ResidualReport john_residual_chain(const TransformRep& psi, const JohnChain& chain,
                                   std::span<const PhasePoint> points);

/// Same through finite differences on a callable. `relative` uses max|psi|
/// only.
ResidualReport john_residual_chain_fd(const PhaseFn& psi, const JohnChain& chain,
                                      std::span<const PhasePoint> points, double h = kDefaultStep,
                                      int max_length = kMaxFdChain);

/// Worst relative residual of every canonical chain of length m+1 applied to
/// J^m f.
struct RangeSweep {
  std::size_t chains = 0;
  double max_relative = 0.0;
  std::string worst_chain;
};
RangeSweep john_range_sweep(const GaussField& f, std::span<const PhasePoint> points,
                            std::size_t cap = 100);

/// Data far from the range: phi^0 = I^0 f + eps exp(-|x|^2) xi_1^2 (m = 0).
struct NegativeControl {
  double valid_residual = 0.0;
  double perturbed_residual = 0.0;
  double ratio = 0.0;
};
NegativeControl negative_control_experiment(int n, std::uint64_t seed, double eps = 1e-2,
                                            double h = kDefaultStep, int points = 20);

/// Observed order of the FD John operator against the exact one, from the
/// errors at h, h/2, h/4: log2(e(h/2)/e(h/4)) together with the errors.
struct RichardsonResult {
  std::vector<double> steps;
  std::vector<double> errors;
  double order = 0.0;
};
RichardsonResult richardson_order(const TransformRep& psi, int i, int j, std::span<const PhasePoint> points,
                                  std::span<const double> steps);

}  // namespace mrt
