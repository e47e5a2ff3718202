#include "mrt/lift.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mrt/weyl.hpp"

namespace mrt {

MomentumDataSet::MomentumDataSet(int m, int n, std::vector<DataFn> phi)
    : m_(m), n_(n), phi_(std::move(phi)) {
  if (m < 0 || n < 2) throw std::domain_error("data set needs m >= 0 and n >= 2");
  if (static_cast<int>(phi_.size()) != m + 1) throw std::domain_error("data set needs m+1 evaluators");
}

MomentumDataSet MomentumDataSet::from_field(const GaussField& f) {
  std::vector<DataFn> phi;
  for (int k = 0; k <= f.rank(); ++k) {
    phi.push_back([f, k](const TSPoint& p) { return ray_transform_I(k, f, p); });
  }
  return MomentumDataSet(f.rank(), f.dim(), std::move(phi));
}

cplx lift_psi(const MomentumDataSet& data, int k, std::span<const double> x,
              std::span<const double> xi) {
  const int m = data.rank();
  if (k < 0 || k > m) throw std::domain_error("lift order out of range");
  if (static_cast<int>(x.size()) != data.dim() || static_cast<int>(xi.size()) != data.dim()) {
    throw std::domain_error("point has wrong dimension");
  }
  const double len = norm(xi);
  if (len == 0.0) throw std::domain_error("direction xi must be non-zero");
  const double s = dot(xi, x);
  Vec y(x.begin(), x.end());
  Vec e(xi.begin(), xi.end());
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] -= s * xi[i] / (len * len);
    e[i] /= len;
  }
  const TSPoint base = TSPoint::make(std::move(y), std::move(e));
  cplx sum = 0;
  for (int l = 0; l <= k; ++l) {
    double c = static_cast<double>(binomial(k, l)) * std::pow(len, l) * std::pow(s, k - l);
    if ((k - l) % 2) c = -c;
    sum += c * data.phi(l, base);
  }
  return std::pow(len, m - 2 * k - 1) * sum;
}

PhaseFn lifted(const MomentumDataSet& data, int k) {
  return [data, k](std::span<const double> x, std::span<const double> xi) {
    return lift_psi(data, k, x, xi);
  };
}

double check_evenness(const MomentumDataSet& data, int k, std::span<const TSPoint> points) {
  const double sign = (data.rank() - k) % 2 ? -1.0 : 1.0;
  double worst = 0.0;
  for (const auto& p : points) {
    Vec neg = p.xi();
    for (auto& c : neg) c = -c;
    const TSPoint q = TSPoint::make(p.x(), std::move(neg));
    worst = std::max(worst, std::abs(data.phi(k, q) - sign * data.phi(k, p)));
  }
  return worst;
}

double check_restriction(const MomentumDataSet& data, int k, std::span<const TSPoint> points) {
  double worst = 0.0;
  for (const auto& p : points) {
    worst = std::max(worst, std::abs(lift_psi(data, k, p.x(), p.xi()) - data.phi(k, p)));
  }
  return worst;
}

double check_homogeneity(const MomentumDataSet& data, int k, std::span<const PhasePoint> points,
                         std::span<const double> ts) {
  const int m = data.rank();
  double worst = 0.0;
  double scale = 1.0;
  for (const auto& p : points) {
    const cplx base = lift_psi(data, k, p.x, p.xi);
    scale = std::max(scale, std::abs(base));
    for (double t : ts) {
      if (t == 0.0) throw std::domain_error("homogeneity sample t must be non-zero");
      Vec txi = p.xi;
      for (auto& c : txi) c *= t;
      const cplx scaled = lift_psi(data, k, p.x, txi);
      const cplx expect = std::pow(t, m - k) / std::abs(t) * base;
      scale = std::max(scale, std::abs(scaled));
      worst = std::max(worst, std::abs(scaled - expect));
    }
  }
  return worst / scale;
}

double check_shift(const MomentumDataSet& data, int k, std::span<const PhasePoint> points,
                   std::span<const double> ts) {
  double worst = 0.0;
  double scale = 1.0;
  for (const auto& p : points) {
    std::vector<cplx> psi(static_cast<std::size_t>(k + 1));
    for (int l = 0; l <= k; ++l) {
      psi[static_cast<std::size_t>(l)] = lift_psi(data, l, p.x, p.xi);
      scale = std::max(scale, std::abs(psi[static_cast<std::size_t>(l)]));
    }
    for (double t : ts) {
      Vec xs = p.x;
      for (std::size_t i = 0; i < xs.size(); ++i) xs[i] += t * p.xi[i];
      const cplx shifted = lift_psi(data, k, xs, p.xi);
      cplx expect = 0;
      for (int l = 0; l <= k; ++l) {
        expect += static_cast<double>(binomial(k, l)) * std::pow(-t, k - l) * psi[static_cast<std::size_t>(l)];
      }
      scale = std::max(scale, std::abs(shifted));
      worst = std::max(worst, std::abs(shifted - expect));
    }
  }
  return worst / scale;
}

double check_lift_against_transform(const GaussField& f, int k, std::span<const PhasePoint> points) {
  const MomentumDataSet data = MomentumDataSet::from_field(f);
  double worst = 0.0;
  for (const auto& p : points) {
    worst = std::max(worst, std::abs(lift_psi(data, k, p.x, p.xi) - momentum_transform(k, f, p.x, p.xi)));
  }
  return worst;
}

double transport_ladder_residual(const GaussField& f, int k, int l,
                                 std::span<const PhasePoint> points) {
  TransformRep lhs = TransformRep::transform(k, f);
  const TransformRep psi = lhs;
  for (int s = 0; s < l; ++s) lhs = transport(lhs);
  TransformRep rhs(f.dim());
  if (l <= k) {
    double c = static_cast<double>(binomial(k, l) * factorial(l));
    if (l % 2) c = -c;
    rhs = c * TransformRep::transform(k - l, f);
  }
  double worst = 0.0;
  double scale = 1.0;
  for (const auto& p : points) {
    scale = std::max(scale, std::abs(psi.evaluate(p)));
    worst = std::max(worst, std::abs(lhs.evaluate(p) - rhs.evaluate(p)));
  }
  return worst / scale;
}

double tangency_check(int n, int i, std::span<const TSPoint> points) {
  if (i < 0 || i >= n) throw std::domain_error("tangency index out of range");
  Polynomial sphere(n);
  Polynomial incidence(n);
  for (int p = 0; p < n; ++p) {
    std::vector<int> key(static_cast<std::size_t>(2 * n), 0);
    key[static_cast<std::size_t>(n + p)] = 2;
    sphere.add_term(key, 1);
    key[static_cast<std::size_t>(n + p)] = 1;
    key[static_cast<std::size_t>(p)] = 1;
    incidence.add_term(key, 1);
  }
  sphere.add_term(std::vector<int>(static_cast<std::size_t>(2 * n), 0), -1);
  double worst = 0.0;
  for (const WeylElement& op : {x_tilde(n, i), xi_tilde(n, i)}) {
    for (const Polynomial* poly : {&sphere, &incidence}) {
      const Polynomial r = apply(op, *poly);
      for (const auto& pt : points) worst = std::max(worst, std::abs(r.evaluate(pt.x(), pt.xi())));
    }
  }
  return worst;
}

}  // namespace mrt
