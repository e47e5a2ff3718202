#include "mrt/johnop.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "mrt/batch.hpp"
#include "mrt/sampling.hpp"

namespace mrt {

JohnChain::JohnChain(const std::vector<std::pair<int, int>>& pairs)
    : length_(static_cast<int>(pairs.size())) {
  for (auto [i, j] : pairs) {
    if (i < 0 || j < 0) throw std::domain_error("John index must be non-negative");
    if (i == j) zero_ = true;
    if (i > j) {
      std::swap(i, j);
      sign_ = -sign_;
    }
    pairs_.emplace_back(i, j);
  }
  std::sort(pairs_.begin(), pairs_.end());
}

std::string JohnChain::to_string() const {
  std::string s = sign_ < 0 ? "-" : "";
  for (auto [i, j] : pairs_) s += "J" + std::to_string(i + 1) + std::to_string(j + 1);
  return s.empty() ? "1" : s;
}

TransformRep john_apply_exact(const TransformRep& rep, int i, int j) {
  if (i == j) return TransformRep(rep.dim());
  return derive(rep, {i}, {j}) - derive(rep, {j}, {i});
}

TransformRep john_apply_chain(const TransformRep& rep, const JohnChain& chain) {
  if (chain.is_zero()) return TransformRep(rep.dim());
  TransformRep out = rep;
  for (auto [i, j] : chain.pairs()) out = john_apply_exact(out, i, j);
  if (chain.sign() < 0) out *= -1.0;
  return out;
}

std::vector<JohnChain> enumerate_canonical_chains(int n, int length, std::size_t cap) {
  std::vector<std::pair<int, int>> basis;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) basis.emplace_back(i, j);
  }
  std::vector<JohnChain> out;
  if (basis.empty() || cap == 0) return out;
  const int b = static_cast<int>(basis.size());
  std::vector<int> pick(static_cast<std::size_t>(length), 0);
  while (out.size() < cap) {
    std::vector<std::pair<int, int>> pairs;
    for (int s : pick) pairs.push_back(basis[static_cast<std::size_t>(s)]);
    out.emplace_back(pairs);
    int s = length - 1;
    while (s >= 0 && pick[static_cast<std::size_t>(s)] == b - 1) --s;
    if (s < 0) break;
    const int v = ++pick[static_cast<std::size_t>(s)];
    for (int r = s + 1; r < length; ++r) pick[static_cast<std::size_t>(r)] = v;
  }
  return out;
}

namespace {

cplx mixed_fd(const PhaseFn& psi, int i, int j, std::span<const double> x, std::span<const double> xi,
              double h) {
  Vec xp(x.begin(), x.end());
  Vec xm(x.begin(), x.end());
  Vec ep(xi.begin(), xi.end());
  Vec em(xi.begin(), xi.end());
  xp[static_cast<std::size_t>(i)] += h;
  xm[static_cast<std::size_t>(i)] -= h;
  ep[static_cast<std::size_t>(j)] += h;
  em[static_cast<std::size_t>(j)] -= h;
  return (psi(xp, ep) - psi(xp, em) - psi(xm, ep) + psi(xm, em)) / (4.0 * h * h);
}

cplx chain_fd(const PhaseFn& psi, const std::vector<std::pair<int, int>>& pairs, std::size_t from,
              std::span<const double> x, std::span<const double> xi, double h) {
  if (from == pairs.size()) return psi(x, xi);
  const PhaseFn inner = [&](std::span<const double> y, std::span<const double> eta) {
    return chain_fd(psi, pairs, from + 1, y, eta, h);
  };
  const auto [i, j] = pairs[from];
  return john_apply_fd(inner, i, j, x, xi, h);
}

}  // namespace

cplx john_apply_fd(const PhaseFn& psi, int i, int j, std::span<const double> x,
                   std::span<const double> xi, double h) {
  if (!(h > 0.0)) throw std::domain_error("finite-difference step must be positive");
  if (i == j) return 0.0;
  return mixed_fd(psi, i, j, x, xi, h) - mixed_fd(psi, j, i, x, xi, h);
}

cplx john_chain_fd(const PhaseFn& psi, const JohnChain& chain, std::span<const double> x,
                   std::span<const double> xi, double h, int max_length) {
  if (chain.length() > max_length) {
    throw std::domain_error("finite-difference John chain of length " + std::to_string(chain.length()) +
                            " is unsupported (max " + std::to_string(max_length) + ")");
  }
  if (chain.is_zero()) return 0.0;
  return static_cast<double>(chain.sign()) * chain_fd(psi, chain.pairs(), 0, x, xi, h);
}

namespace {

ResidualReport summarize(const std::vector<cplx>& values, double scale) {
  ResidualReport r;
  double sq = 0.0;
  for (const auto& v : values) {
    const double a = std::abs(v);
    r.per_point.push_back(a);
    r.max_abs = std::max(r.max_abs, a);
    sq += a * a;
  }
  if (!values.empty()) r.rms = std::sqrt(sq / static_cast<double>(values.size()));
  r.relative = r.max_abs / scale;
  return r;
}

double max_abs(const std::vector<cplx>& v) {
  double m = 0.0;
  for (const auto& c : v) m = std::max(m, std::abs(c));
  return m;
}

TransformRep unsymmetrized_derivative(const TransformRep& psi, const JohnChain& chain) {
  std::vector<int> xd, xid;
  for (auto [i, j] : chain.pairs()) {
    xd.push_back(i);
    xid.push_back(j);
  }
  return derive(psi, xd, xid);
}

}  // namespace

ResidualReport john_residual_chain(const TransformRep& psi, const JohnChain& chain,
                                   std::span<const PhasePoint> points) {
  const auto values = evaluate_batch(john_apply_chain(psi, chain), points);
  const double psi_scale = std::max(1.0, max_abs(evaluate_batch(psi, points)));
  const double deriv_scale =
      chain.is_zero() ? 1.0 : std::max(1.0, max_abs(evaluate_batch(unsymmetrized_derivative(psi, chain), points)));
  return summarize(values, psi_scale * deriv_scale);
}

ResidualReport john_residual_chain_fd(const PhaseFn& psi, const JohnChain& chain,
                                      std::span<const PhasePoint> points, double h, int max_length) {
  const auto values = parallel_map<cplx>(points.size(), [&](std::size_t k) {
    return john_chain_fd(psi, chain, points[k].x, points[k].xi, h, max_length);
  });
  const auto psi_values =
      parallel_map<cplx>(points.size(), [&](std::size_t k) { return psi(points[k].x, points[k].xi); });
  return summarize(values, std::max(1.0, max_abs(psi_values)));
}

RangeSweep john_range_sweep(const GaussField& f, std::span<const PhasePoint> points, std::size_t cap) {
  const TransformRep psi = TransformRep::transform(f.rank(), f);
  const double psi_scale = std::max(1.0, max_abs(evaluate_batch(psi, points)));
  RangeSweep sweep;
  // Chains come out in lexicographic order, so consecutive chains share
  // prefixes; cache the partial products.
  std::map<std::vector<std::pair<int, int>>, TransformRep> prefix;
  for (const auto& chain : enumerate_canonical_chains(f.dim(), f.rank() + 1, cap)) {
    std::vector<std::pair<int, int>> key;
    TransformRep cur = psi;
    for (auto pr : chain.pairs()) {
      key.push_back(pr);
      auto it = prefix.find(key);
      if (it == prefix.end()) it = prefix.emplace(key, john_apply_exact(cur, pr.first, pr.second)).first;
      cur = it->second;
    }
    const double deriv_scale =
        std::max(1.0, max_abs(evaluate_batch(unsymmetrized_derivative(psi, chain), points)));
    const double rel = max_abs(evaluate_batch(cur, points)) / (psi_scale * deriv_scale);
    ++sweep.chains;
    if (rel >= sweep.max_relative) {
      sweep.max_relative = rel;
      sweep.worst_chain = chain.to_string();
    }
  }
  return sweep;
}

NegativeControl negative_control_experiment(int n, std::uint64_t seed, double eps, double h, int count) {
  const GaussField f = random_field(0, n, seed);
  const MomentumDataSet valid = MomentumDataSet::from_field(f);
  const MomentumDataSet perturbed(0, n, {[f, eps](const TSPoint& p) {
                                    const double r2 = dot(p.x(), p.x());
                                    return ray_transform_I(0, f, p) + eps * std::exp(-r2) * p.xi()[0] * p.xi()[0];
                                  }});
  // Points on T S^{n-1} near the data's support; the stencil still leaves the
  // bundle in every direction.
  std::vector<PhasePoint> points;
  for (const auto& p : random_ts_points(n, count, seed + 1, 1.0)) points.push_back(p.phase());
  const JohnChain chain({{0, 1}});
  NegativeControl nc;
  nc.valid_residual = john_residual_chain_fd(lifted(valid, 0), chain, points, h).max_abs;
  nc.perturbed_residual = john_residual_chain_fd(lifted(perturbed, 0), chain, points, h).max_abs;
  nc.ratio = nc.perturbed_residual / nc.valid_residual;
  return nc;
}

RichardsonResult richardson_order(const TransformRep& psi, int i, int j, std::span<const PhasePoint> points,
                                  std::span<const double> steps) {
  if (steps.size() < 2) throw std::domain_error("Richardson test needs at least two steps");
  const TransformRep exact = john_apply_exact(psi, i, j);
  const PhaseFn fn = [&psi](std::span<const double> x, std::span<const double> xi) { return psi.evaluate(x, xi); };
  RichardsonResult r;
  for (double h : steps) {
    const auto errs = parallel_map<double>(points.size(), [&](std::size_t k) {
      return std::abs(john_apply_fd(fn, i, j, points[k].x, points[k].xi, h) - exact.evaluate(points[k]));
    });
    r.steps.push_back(h);
    r.errors.push_back(*std::max_element(errs.begin(), errs.end()));
  }
  r.order = 1e300;
  for (std::size_t s = 1; s < steps.size(); ++s) {
    const double slope = std::log(r.errors[s - 1] / r.errors[s]) / std::log(steps[s - 1] / steps[s]);
    r.order = std::min(r.order, slope);
  }
  return r;
}

}  // namespace mrt
