#pragma once

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "mrt/gaussfield.hpp"
#include "mrt/lift.hpp"

namespace mrt {

// Plane conventions: z = x_1 + i x_2, zeta = xi_1 + i xi_2, and the point
// i p zeta of T S^1 is x = p xi_perp with xi_perp = (-xi_2, xi_1).

/// dz^{m-j} dzbar^j = sum_q A(j,q) dx_1^{m-q} dx_2^q, and B = A^{-1}.
struct BasisChange {
  int m = 0;
  Eigen::MatrixXcd A;
  Eigen::MatrixXcd B;
  static BasisChange make(int m);
};

/// Real coordinates  check f_q = C(m,q) f_{1..1 2..2} (q twos), as rank-0 fields.
std::vector<GaussField> real_coordinates(const GaussField& f);

/// Complex coordinates  tilde f_j = sum_q B(q,j) check f_q, as rank-0 fields.
std::vector<GaussField> real_to_complex(const GaussField& f);

/// Inverse of real_to_complex.
GaussField complex_to_real(const std::vector<GaussField>& complex_components);

/// int z^alpha zbar^beta g(z) dsigma for a rank-0 planar field g, exact.
cplx complex_moment(const GaussField& g, int alpha, int beta);

/// Lazily filled, memoized table of the complex integral momenta
/// tilde mu_j^{alpha beta} of a planar field. Lookups are thread-safe.
class MomentTable {
 public:
  explicit MomentTable(const GaussField& f);
  int rank() const { return m_; }
  cplx get(int j, int alpha, int beta) const;

 private:
  int m_;
  std::vector<GaussField> components_;
  mutable std::mutex mutex_;
  mutable std::map<std::tuple<int, int, int>, cplx> cache_;
};

inline Vec unit_direction(double theta) { return {std::cos(theta), std::sin(theta)}; }

/// int p^r (I^k f)(p xi_perp, xi) dp with xi = (cos theta, sin theta), exact
/// per Gaussian term in the rotated frame.
cplx moment_integral(const GaussField& f, int k, int r, double theta);

/// int p^r phi(p xi_perp, xi) dp for an arbitrary data evaluator, by the
/// trapezoid rule on [-half_width, half_width].
cplx moment_integral(const DataFn& phi, int r, double theta, double half_width = 14.0,
                     double step = 0.02);

/// Coefficients c_s of zeta^{d-s} zetabar^s (s = 0..d, d = m+r+k) of P^{rk}.
std::vector<cplx> predicted_polynomial(const MomentTable& mu, int r, int k);

/// Value of sum_s c_s zeta^{d-s} zetabar^s on the unit circle.
cplx evaluate_on_circle(const std::vector<cplx>& coeffs, double theta);

struct HomogeneousFit {
  std::vector<cplx> coefficients;
  double residual = 0.0;
};

/// Least-squares fit of samples on |zeta| = 1 by sum_s c_s e^{i(d-2s)theta}.
/// Throws std::domain_error if the sample set does not determine the fit.
HomogeneousFit fit_homogeneous(const std::vector<double>& thetas, const std::vector<cplx>& values, int d);

/// 4d+8 equispaced angles on [0, 2 pi).
std::vector<double> circle_angles(int d);

/// Relations sum_j (-1)^j C(r,s-j) (mu_j^{s-j,r+j-s} - nu_j^{s-j,r+j-s}) = 0 for
/// r <= r_max, 0 <= s <= r+m; plus their s = 0 and (s = m+k+1, r = k+1)
/// special cases. Values are max absolute sums.
struct ConsistencyReport {
  double all = 0.0;
  double first = 0.0;
  double last = 0.0;
  int relations = 0;
};
ConsistencyReport consistency_check(const MomentTable& mu, const MomentTable& nu, int r_max);

/// Fit report of the moment conditions for one data tuple.
struct MomentFitRow {
  int r = 0;
  int k = 0;
  int degree = 0;
  double fit_residual = 0.0;
  /// max |fitted - predicted| coefficient, when a prediction is available
  double coefficient_error = 0.0;
  std::vector<cplx> fitted;
  std::vector<cplx> predicted;
};

/// Moment fits for data from a known field (exact moments, predictions from
/// the field's momenta).
std::vector<MomentFitRow> moment_fits(const GaussField& f, int r_max);

/// Moment fits for arbitrary data of rank m (trapezoid moments, no prediction).
std::vector<MomentFitRow> moment_fits(const MomentumDataSet& data, int r_max);

/// chi^k = -(phi^{k+1} - I^{k+1} g)/(k+1), k = 0..m-1.
MomentumDataSet chi_recursion(const MomentumDataSet& data, const GaussField& g);

/// max |I^k(dv) + k I^{k-1} v| over the points, k = 0..rank(v)+1.
double inner_derivative_residual(const GaussField& v, std::span<const TSPoint> points);

}  // namespace mrt
