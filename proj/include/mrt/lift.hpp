#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mrt/gaussfield.hpp"
#include "mrt/xray.hpp"

namespace mrt {

/// Function of (x, xi) on R^n x (R^n \ 0).
using PhaseFn = std::function<cplx(std::span<const double> x, std::span<const double> xi)>;
/// Function on T S^{n-1}.
using DataFn = std::function<cplx(const TSPoint&)>;

/// Data tuple phi^0..phi^m on T S^{n-1}. Immutable once built; evaluators
/// must be pure so the set can be shared between threads.
class MomentumDataSet {
 public:
  MomentumDataSet(int m, int n, std::vector<DataFn> phi);

  /// phi^k = I^k f.
  static MomentumDataSet from_field(const GaussField& f);

  int rank() const { return m_; }
  int dim() const { return n_; }
  cplx phi(int k, const TSPoint& p) const { return phi_.at(static_cast<std::size_t>(k))(p); }
  const DataFn& evaluator(int k) const { return phi_.at(static_cast<std::size_t>(k)); }

 private:
  int m_;
  int n_;
  std::vector<DataFn> phi_;
};

/// psi^k(x, xi) = |xi|^{m-2k-1} sum_l (-1)^{k-l} C(k,l) |xi|^l <xi,x>^{k-l}
///                phi^l(x - <xi,x> xi/|xi|^2, xi/|xi|)
cplx lift_psi(const MomentumDataSet& data, int k, std::span<const double> x,
              std::span<const double> xi);

/// lift_psi(data, k, ., .) as a standalone callable (copies the data set).
PhaseFn lifted(const MomentumDataSet& data, int k);

/// max |phi^k(x,-xi) - (-1)^{m-k} phi^k(x,xi)|
double check_evenness(const MomentumDataSet& data, int k, std::span<const TSPoint> points);

/// max |psi^k - phi^k| on T S^{n-1}.
double check_restriction(const MomentumDataSet& data, int k, std::span<const TSPoint> points);

/// max |psi^k(x,t xi) - t^{m-k}/|t| psi^k(x,xi)| / max(1, max |psi^k|).
double check_homogeneity(const MomentumDataSet& data, int k, std::span<const PhasePoint> points,
                         std::span<const double> ts);

/// max |psi^k(x+t xi,xi) - sum_l C(k,l) (-t)^{k-l} psi^l(x,xi)| / max(1, max |psi|).
double check_shift(const MomentumDataSet& data, int k, std::span<const PhasePoint> points,
                   std::span<const double> ts);

/// max |lift_psi(k) - J^k f| over off-manifold points, for data built from f.
double check_lift_against_transform(const GaussField& f, int k, std::span<const PhasePoint> points);

/// <xi,d_x>^l psi^k = (-1)^l C(k,l) l! psi^{k-l} (zero for l > k) with
/// psi^k = J^k f, both sides on the exact backend. Returns the relative
/// residual max|lhs - rhs| / max(1, max|psi^k|).
double transport_ladder_residual(const GaussField& f, int k, int l,
                                 std::span<const PhasePoint> points);

/// The operators d/dx^i - xi_i <xi,d_x> and d/dxi^i - x_i <xi,d_x> - xi_i <xi,d_xi>
/// applied to |xi|^2 - 1 and <x,xi>; max absolute value over the points.
/// `i` is 0-based.
double tangency_check(int n, int i, std::span<const TSPoint> points);

}  // namespace mrt
