#include "mrt/planar2d.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mrt/batch.hpp"
#include "mrt/quadrature.hpp"

namespace mrt {

namespace {

constexpr cplx kI(0.0, 1.0);

void require_planar(const GaussField& f) {
  if (f.dim() != 2) throw std::domain_error("planar operation needs n = 2");
}

cplx ipow(cplx z, int e) {
  cplx r = 1.0;
  for (int s = 0; s < e; ++s) r *= z;
  return r;
}

double rpow(double x, int e) {
  double r = 1.0;
  for (int s = 0; s < e; ++s) r *= x;
  return r;
}

std::vector<int> two_count_tuple(int m, int q) {
  std::vector<int> t(static_cast<std::size_t>(m), 0);
  for (int s = m - q; s < m; ++s) t[static_cast<std::size_t>(s)] = 1;
  return t;
}

}  // namespace

BasisChange BasisChange::make(int m) {
  if (m < 0) throw std::domain_error("tensor rank must be non-negative");
  BasisChange bc;
  bc.m = m;
  bc.A = Eigen::MatrixXcd::Zero(m + 1, m + 1);
  for (int j = 0; j <= m; ++j) {
    // (1 + i y)^{m-j} (1 - i y)^j with y standing for dx_2 / dx_1
    std::vector<cplx> poly{1.0};
    auto times = [&](cplx c) {
      std::vector<cplx> next(poly.size() + 1, 0.0);
      for (std::size_t q = 0; q < poly.size(); ++q) {
        next[q] += poly[q];
        next[q + 1] += c * poly[q];
      }
      poly = std::move(next);
    };
    for (int s = 0; s < m - j; ++s) times(kI);
    for (int s = 0; s < j; ++s) times(-kI);
    for (int q = 0; q <= m; ++q) bc.A(j, q) = poly[static_cast<std::size_t>(q)];
  }
  bc.B = bc.A.inverse();
  return bc;
}

std::vector<GaussField> real_coordinates(const GaussField& f) {
  require_planar(f);
  const int m = f.rank();
  std::vector<GaussField> out;
  for (int q = 0; q <= m; ++q) {
    out.push_back(static_cast<double>(binomial(m, q)) * component_field(f, two_count_tuple(m, q)));
  }
  return out;
}

std::vector<GaussField> real_to_complex(const GaussField& f) {
  const int m = f.rank();
  const BasisChange bc = BasisChange::make(m);
  const auto check = real_coordinates(f);
  std::vector<GaussField> out;
  for (int j = 0; j <= m; ++j) {
    GaussField c(0, 2);
    for (int q = 0; q <= m; ++q) c += bc.B(q, j) * check[static_cast<std::size_t>(q)];
    c.normalize();
    out.push_back(std::move(c));
  }
  return out;
}

GaussField complex_to_real(const std::vector<GaussField>& complex_components) {
  if (complex_components.empty()) throw std::domain_error("need at least one complex component");
  const int m = static_cast<int>(complex_components.size()) - 1;
  const BasisChange bc = BasisChange::make(m);
  GaussField f(m, 2);
  for (int q = 0; q <= m; ++q) {
    GaussField check(0, 2);
    for (int j = 0; j <= m; ++j) check += bc.A(j, q) * complex_components[static_cast<std::size_t>(j)];
    check *= 1.0 / static_cast<double>(binomial(m, q));
    check.normalize();
    for (const auto& t : check.component(0)) f.add_term(two_count_tuple(m, q), t);
  }
  return f;
}

cplx complex_moment(const GaussField& g, int alpha, int beta) {
  require_planar(g);
  if (g.rank() != 0) throw std::domain_error("complex_moment expects a rank-0 field");
  if (alpha < 0 || beta < 0) throw std::domain_error("moment orders must be non-negative");
  cplx total = 0;
  for (const auto& t : g.component(0)) {
    const double s = 1.0 / std::sqrt(t.width);
    const cplx cz(t.center[0], t.center[1]);
    const auto& rule = gauss_hermite(hermite_nodes_for_degree(alpha + beta + t.degree()));
    cplx sum = 0;
    for (std::size_t a = 0; a < rule.nodes.size(); ++a) {
      for (std::size_t b = 0; b < rule.nodes.size(); ++b) {
        const double u1 = rule.nodes[a] * s, u2 = rule.nodes[b] * s;
        const cplx z = cz + cplx(u1, u2);
        sum += rule.weights[a] * rule.weights[b] * ipow(z, alpha) * ipow(std::conj(z), beta) *
               rpow(u1, t.power[0]) * rpow(u2, t.power[1]);
      }
    }
    total += t.coeff * sum / t.width;
  }
  return total;
}

MomentTable::MomentTable(const GaussField& f) : m_(f.rank()), components_(real_to_complex(f)) {}

cplx MomentTable::get(int j, int alpha, int beta) const {
  if (j < 0 || j > m_) throw std::domain_error("complex component index out of range");
  const auto key = std::make_tuple(j, alpha, beta);
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  const cplx v = complex_moment(components_[static_cast<std::size_t>(j)], alpha, beta);
  std::lock_guard lock(mutex_);
  cache_.emplace(key, v);
  return v;
}

cplx moment_integral(const GaussField& f, int k, int r, double theta) {
  require_planar(f);
  const Vec xi = unit_direction(theta);
  const Vec perp{-xi[1], xi[0]};
  cplx total = 0;
  for (const auto& idx : enumerate_indices(f.rank(), 2)) {
    const auto& terms = f.component(index_rank(idx, 2));
    if (terms.empty()) continue;
    const double weight = static_cast<double>(idx.multiplicity()) * monomial(idx, xi);
    for (const auto& t : terms) {
      const double s = 1.0 / std::sqrt(t.width);
      const double pc = dot(t.center, perp), tc = dot(t.center, xi);
      const auto& rule = gauss_hermite(hermite_nodes_for_degree(r + k + t.degree()));
      double sum = 0;
      for (std::size_t a = 0; a < rule.nodes.size(); ++a) {
        for (std::size_t b = 0; b < rule.nodes.size(); ++b) {
          const double u = rule.nodes[a] * s, v = rule.nodes[b] * s;
          double val = rule.weights[a] * rule.weights[b] * rpow(pc + u, r) * rpow(tc + v, k);
          for (int i = 0; i < 2; ++i) val *= rpow(u * perp[static_cast<std::size_t>(i)] + v * xi[static_cast<std::size_t>(i)], t.power[static_cast<std::size_t>(i)]);
          sum += val;
        }
      }
      total += weight * t.coeff * sum / t.width;
    }
  }
  return total;
}

namespace {

std::vector<cplx> sample_line(const DataFn& phi, double theta, double half_width, double step) {
  const Vec xi = unit_direction(theta);
  const int steps = static_cast<int>(std::lround(half_width / step));
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(2 * steps + 1));
  for (int s = -steps; s <= steps; ++s) {
    const double p = s * step;
    out.push_back(phi(TSPoint::make({-p * xi[1], p * xi[0]}, xi)));
  }
  return out;
}

cplx line_moment(const std::vector<cplx>& samples, int r, double step) {
  const int steps = static_cast<int>(samples.size() / 2);
  cplx sum = 0;
  for (int s = -steps; s <= steps; ++s) sum += rpow(s * step, r) * samples[static_cast<std::size_t>(s + steps)];
  return sum * step;
}

}  // namespace

cplx moment_integral(const DataFn& phi, int r, double theta, double half_width, double step) {
  return line_moment(sample_line(phi, theta, half_width, step), r, step);
}

std::vector<cplx> predicted_polynomial(const MomentTable& mu, int r, int k) {
  const int m = mu.rank();
  const int d = m + r + k;
  std::vector<cplx> c(static_cast<std::size_t>(d + 1), 0.0);
  const cplx front = ipow(kI, r) / std::ldexp(1.0, r + k);
  for (int j = 0; j <= m; ++j) {
    for (int a = 0; a <= r; ++a) {
      for (int b = 0; b <= k; ++b) {
        double w = static_cast<double>(binomial(r, a) * binomial(k, b));
        if (a % 2) w = -w;
        c[static_cast<std::size_t>(j + a + b)] += front * w * mu.get(j, a + b, r + k - a - b);
      }
    }
  }
  return c;
}

cplx evaluate_on_circle(const std::vector<cplx>& coeffs, double theta) {
  const int d = static_cast<int>(coeffs.size()) - 1;
  cplx v = 0;
  for (int s = 0; s <= d; ++s) v += coeffs[static_cast<std::size_t>(s)] * std::polar(1.0, (d - 2 * s) * theta);
  return v;
}

std::vector<double> circle_angles(int d) {
  const int count = 4 * d + 8;
  std::vector<double> out;
  for (int t = 0; t < count; ++t) out.push_back(2.0 * std::numbers::pi * t / count);
  return out;
}

HomogeneousFit fit_homogeneous(const std::vector<double>& thetas, const std::vector<cplx>& values, int d) {
  if (d < 0) throw std::domain_error("degree must be non-negative");
  if (thetas.size() != values.size()) throw std::domain_error("angles and values differ in length");
  const auto rows = static_cast<Eigen::Index>(thetas.size());
  Eigen::MatrixXcd M(rows, d + 1);
  Eigen::VectorXcd y(rows);
  for (Eigen::Index t = 0; t < rows; ++t) {
    for (int s = 0; s <= d; ++s) M(t, s) = std::polar(1.0, (d - 2 * s) * thetas[static_cast<std::size_t>(t)]);
    y(t) = values[static_cast<std::size_t>(t)];
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(M);
  if (rows < d + 1 || qr.rank() < d + 1) throw std::domain_error("sample angles do not determine a degree-" + std::to_string(d) + " fit");
  const Eigen::VectorXcd c = qr.solve(y);
  HomogeneousFit fit;
  fit.coefficients.assign(c.data(), c.data() + c.size());
  fit.residual = (M * c - y).cwiseAbs().maxCoeff();
  return fit;
}

ConsistencyReport consistency_check(const MomentTable& mu, const MomentTable& nu, int r_max) {
  if (mu.rank() != nu.rank()) throw std::domain_error("moment tables of different rank");
  const int m = mu.rank();
  ConsistencyReport rep;
  for (int r = 0; r <= r_max; ++r) {
    for (int s = 0; s <= r + m; ++s) {
      cplx sum = 0;
      for (int j = std::max(0, s - r); j <= std::min(s, m); ++j) {
        double w = static_cast<double>(binomial(r, s - j));
        if (j % 2) w = -w;
        sum += w * (mu.get(j, s - j, r + j - s) - nu.get(j, s - j, r + j - s));
      }
      const double a = std::abs(sum);
      ++rep.relations;
      rep.all = std::max(rep.all, a);
      if (s == 0) rep.first = std::max(rep.first, a);
      if (r >= 1 && s == r + m) rep.last = std::max(rep.last, a);
    }
  }
  return rep;
}

std::vector<MomentFitRow> moment_fits(const GaussField& f, int r_max) {
  require_planar(f);
  const int m = f.rank();
  const MomentTable mu(f);
  std::vector<std::pair<int, int>> jobs;
  for (int r = 0; r <= r_max; ++r)
    for (int k = 0; k <= m; ++k) jobs.emplace_back(r, k);
  return parallel_map<MomentFitRow>(jobs.size(), [&](std::size_t job) {
    const auto [r, k] = jobs[job];
    MomentFitRow row;
    row.r = r;
    row.k = k;
    row.degree = m + r + k;
    const auto thetas = circle_angles(row.degree);
    std::vector<cplx> values;
    for (double th : thetas) values.push_back(moment_integral(f, k, r, th));
    const HomogeneousFit fit = fit_homogeneous(thetas, values, row.degree);
    row.fit_residual = fit.residual;
    row.fitted = fit.coefficients;
    row.predicted = predicted_polynomial(mu, r, k);
    for (std::size_t s = 0; s < row.fitted.size(); ++s) {
      row.coefficient_error = std::max(row.coefficient_error, std::abs(row.fitted[s] - row.predicted[s]));
    }
    return row;
  });
}

std::vector<MomentFitRow> moment_fits(const MomentumDataSet& data, int r_max) {
  if (data.dim() != 2) throw std::domain_error("planar operation needs n = 2");
  const int m = data.rank();
  constexpr double kHalfWidth = 14.0, kStep = 0.05;
  std::vector<MomentFitRow> rows;
  for (int k = 0; k <= m; ++k) {
    // One set of line samples per angle serves every r.
    const int d_max = m + r_max + k;
    const auto thetas = circle_angles(d_max);
    const auto samples = parallel_map<std::vector<cplx>>(thetas.size(), [&](std::size_t t) {
      return sample_line(data.evaluator(k), thetas[t], kHalfWidth, kStep);
    });
    for (int r = 0; r <= r_max; ++r) {
      MomentFitRow row;
      row.r = r;
      row.k = k;
      row.degree = m + r + k;
      std::vector<cplx> values;
      for (const auto& s : samples) values.push_back(line_moment(s, r, kStep));
      const HomogeneousFit fit = fit_homogeneous(thetas, values, row.degree);
      row.fit_residual = fit.residual;
      row.fitted = fit.coefficients;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

MomentumDataSet chi_recursion(const MomentumDataSet& data, const GaussField& g) {
  const int m = data.rank();
  if (m < 1) throw std::domain_error("the recursion needs m >= 1");
  if (g.rank() != m || g.dim() != data.dim()) throw std::domain_error("g must match the data's rank and dimension");
  std::vector<DataFn> chi;
  for (int k = 0; k < m; ++k) {
    chi.push_back([phi = data.evaluator(k + 1), g, k](const TSPoint& p) {
      return -(phi(p) - ray_transform_I(k + 1, g, p)) / static_cast<double>(k + 1);
    });
  }
  return MomentumDataSet(m - 1, data.dim(), std::move(chi));
}

double inner_derivative_residual(const GaussField& v, std::span<const TSPoint> points) {
  const GaussField dv = inner_derivative(v);
  double worst = 0.0;
  for (int k = 0; k <= dv.rank(); ++k) {
    for (const auto& p : points) {
      const cplx lhs = ray_transform_I(k, dv, p);
      const cplx rhs = k == 0 ? cplx(0.0) : -static_cast<double>(k) * ray_transform_I(k - 1, v, p);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

}  // namespace mrt
