#include "mrt/xray.hpp"

#include <cmath>
#include <stdexcept>

#include "mrt/quadrature.hpp"

namespace mrt {

namespace {

const std::vector<MultiIndex>& cached_indices(int m, int n) {
  thread_local std::map<std::pair<int, int>, std::vector<MultiIndex>> cache;
  auto it = cache.find({m, n});
  if (it == cache.end()) it = cache.emplace(std::pair{m, n}, enumerate_indices(m, n)).first;
  return it->second;
}

double xi_monomial(const std::vector<int>& power, std::span<const double> xi) {
  double r = 1.0;
  for (std::size_t i = 0; i < power.size(); ++i) {
    for (int e = 0; e < power[i]; ++e) r *= xi[i];
  }
  return r;
}

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

TSPoint TSPoint::make(Vec x, Vec xi) {
  if (x.size() != xi.size() || x.empty()) throw std::domain_error("TS point: x and xi must share a dimension");
  const double len = norm(xi);
  const double along = dot(x, xi);
  if (std::abs(len - 1.0) > kReprojectTolerance || std::abs(along) > kReprojectTolerance) {
    throw std::domain_error("point is not on T S^{n-1}");
  }
  if (std::abs(len - 1.0) > 0.0 || along != 0.0) {
    for (auto& v : xi) v /= len;
    const double c = dot(x, xi);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * xi[i];
  }
  return TSPoint(std::move(x), std::move(xi));
}

cplx term_line_integral(int p, const GaussTerm& term, std::span<const double> x,
                        std::span<const double> xi) {
  const std::size_t n = x.size();
  const double xi2 = dot(xi, xi);
  // |x + t xi - c|^2 = |u|^2 + |xi|^2 (t - t*)^2 with u the part of w = x - c
  // orthogonal to xi.
  double w_xi = 0.0;
  for (std::size_t i = 0; i < n; ++i) w_xi += (x[i] - term.center[i]) * xi[i];
  const double t_star = -w_xi / xi2;
  thread_local Vec u;
  u.resize(n);
  double d2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = x[i] - term.center[i] + t_star * xi[i];
    d2 += u[i] * u[i];
  }
  const double scale = 1.0 / (std::sqrt(term.width * xi2));
  const auto& rule = gauss_hermite(hermite_nodes_for_degree(term.degree() + p));
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const double dt = rule.nodes[k] * scale;
    double val = 1.0;
    const double t = t_star + dt;
    for (int e = 0; e < p; ++e) val *= t;
    for (std::size_t i = 0; i < n; ++i) {
      const double y = u[i] + dt * xi[i];
      for (int e = 0; e < term.power[i]; ++e) val *= y;
    }
    sum += rule.weights[k] * val;
  }
  return term.coeff * (std::exp(-term.width * d2) * scale * sum);
}

cplx momentum_transform(int p, const GaussField& g, std::span<const double> x,
                        std::span<const double> xi) {
  if (p < 0) throw std::domain_error("momentum order must be non-negative");
  if (static_cast<int>(x.size()) != g.dim() || static_cast<int>(xi.size()) != g.dim()) {
    throw std::domain_error("point has wrong dimension");
  }
  if (dot(xi, xi) == 0.0) throw std::domain_error("direction xi must be non-zero");
  const auto& indices = cached_indices(g.rank(), g.dim());
  cplx total = 0;
  for (std::size_t pos = 0; pos < indices.size(); ++pos) {
    const auto& terms = g.component(pos);
    if (terms.empty()) continue;
    cplx comp = 0;
    for (const auto& t : terms) comp += term_line_integral(p, t, x, xi);
    total += static_cast<double>(indices[pos].multiplicity()) * monomial(indices[pos], xi) * comp;
  }
  return total;
}

cplx ray_transform_I(int k, const GaussField& f, const TSPoint& point) {
  return momentum_transform(k, f, point.x(), point.xi());
}

TransformRep TransformRep::transform(int p, const GaussField& g) {
  if (p < 0) throw std::domain_error("momentum order must be non-negative");
  TransformRep rep(g.dim());
  rep.add(RepKey{std::vector<int>(g.dim(), 0), p, g.rank()}, g);
  return rep;
}

std::size_t TransformRep::term_count() const {
  std::size_t total = 0;
  for (const auto& [key, field] : terms_) total += field.term_count();
  return total;
}

void TransformRep::add(const RepKey& key, const GaussField& field, cplx coeff) {
  if (field.dim() != n_ || field.rank() != key.q) throw std::domain_error("summand shape mismatch");
  if (field.empty() || coeff == cplx(0.0, 0.0)) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    GaussField f = field;
    if (coeff != cplx(1.0, 0.0)) f *= coeff;
    if (!f.empty()) terms_.emplace(key, std::move(f));
    return;
  }
  if (coeff == cplx(1.0, 0.0)) {
    it->second += field;
  } else {
    it->second += coeff * field;
  }
  if (it->second.empty()) terms_.erase(it);
}

TransformRep& TransformRep::operator+=(const TransformRep& other) {
  if (other.n_ != n_) throw std::domain_error("rep dimension mismatch");
  for (const auto& [key, field] : other.terms_) add(key, field);
  return *this;
}

TransformRep& TransformRep::operator-=(const TransformRep& other) {
  if (other.n_ != n_) throw std::domain_error("rep dimension mismatch");
  for (const auto& [key, field] : other.terms_) add(key, field, -1.0);
  return *this;
}

TransformRep& TransformRep::operator*=(cplx s) {
  if (s == cplx(0.0, 0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, field] : terms_) field *= s;
  return *this;
}

TransformRep operator+(TransformRep a, const TransformRep& b) { return a += b; }
TransformRep operator-(TransformRep a, const TransformRep& b) { return a -= b; }
TransformRep operator*(cplx s, TransformRep r) { return r *= s; }

cplx TransformRep::evaluate(std::span<const double> x, std::span<const double> xi) const {
  cplx total = 0;
  for (const auto& [key, field] : terms_) {
    total += xi_monomial(key.xi_power, xi) * momentum_transform(key.p, field, x, xi);
  }
  return total;
}

double TransformRep::magnitude(std::span<const double> x, std::span<const double> xi) const {
  double total = 0;
  for (const auto& [key, field] : terms_) {
    total += std::abs(xi_monomial(key.xi_power, xi) * momentum_transform(key.p, field, x, xi));
  }
  return total;
}

TransformRep derive_x(const TransformRep& rep, int i) {
  if (i < 0 || i >= rep.dim()) throw std::domain_error("x-derivative direction out of range");
  TransformRep out(rep.dim());
  for (const auto& [key, field] : rep.summands()) out.add(key, partial_derivative(field, i));
  return out;
}

TransformRep derive_xi(const TransformRep& rep, int j) {
  if (j < 0 || j >= rep.dim()) throw std::domain_error("xi-derivative direction out of range");
  TransformRep out(rep.dim());
  for (const auto& [key, field] : rep.summands()) {
    if (key.xi_power[j] > 0) {
      RepKey lowered = key;
      --lowered.xi_power[j];
      out.add(lowered, field, static_cast<double>(key.xi_power[j]));
    }
    // Differentiating t^p <g(x + t xi), xi^q> in xi^j under the integral.
    out.add(RepKey{key.xi_power, key.p + 1, key.q}, partial_derivative(field, j));
    if (key.q > 0) {
      out.add(RepKey{key.xi_power, key.p, key.q - 1}, partial_contract(field, j),
              static_cast<double>(key.q));
    }
  }
  return out;
}

TransformRep derive(const TransformRep& rep, const std::vector<int>& x_dirs,
                    const std::vector<int>& xi_dirs) {
  TransformRep out = rep;
  for (int i : x_dirs) out = derive_x(out, i);
  for (int j : xi_dirs) out = derive_xi(out, j);
  return out;
}

TransformRep transport(const TransformRep& rep) {
  TransformRep out(rep.dim());
  for (const auto& [key, field] : rep.summands()) {
    for (int i = 0; i < rep.dim(); ++i) {
      RepKey raised = key;
      ++raised.xi_power[i];
      out.add(raised, partial_derivative(field, i));
    }
  }
  return out;
}

TransformRep transport_by_parts(const TransformRep& rep) {
  TransformRep out(rep.dim());
  for (const auto& [key, field] : rep.summands()) {
    if (key.p == 0) continue;
    out.add(RepKey{key.xi_power, key.p - 1, key.q}, field, -static_cast<double>(key.p));
  }
  return out;
}

}  // namespace mrt
