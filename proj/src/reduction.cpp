#include "mrt/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "mrt/batch.hpp"
#include "mrt/lift.hpp"

namespace mrt {

namespace {

using Split = std::pair<std::vector<int>, std::vector<int>>;

// sigma(I) applied to "first k indices go to x, the rest to xi": weights of
// each distinct (x-multiset, xi-multiset) split, summing to 1.
std::map<Split, double> symmetrized_splits(const std::vector<int>& target, int k) {
  const int m = static_cast<int>(target.size());
  std::vector<int> order(static_cast<std::size_t>(m));
  for (int s = 0; s < m; ++s) order[static_cast<std::size_t>(s)] = s;
  std::map<Split, double> out;
  const double w = 1.0 / static_cast<double>(factorial(m));
  do {
    Split sp;
    for (int s = 0; s < m; ++s) {
      const int v = target[static_cast<std::size_t>(order[static_cast<std::size_t>(s)])];
      (s < k ? sp.first : sp.second).push_back(v);
    }
    std::sort(sp.first.begin(), sp.first.end());
    std::sort(sp.second.begin(), sp.second.end());
    out[sp] += w;
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

double max_abs(const std::vector<cplx>& v) {
  double m = 0.0;
  for (const auto& c : v) m = std::max(m, std::abs(c));
  return m;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

double rel_diff(const TransformRep& a, const TransformRep& b, std::span<const PhasePoint> points) {
  const auto va = evaluate_batch(a, points);
  const auto vb = evaluate_batch(b, points);
  return max_diff(va, vb) / std::max(1.0, std::max(max_abs(va), max_abs(vb)));
}

void for_each_tuple(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  for (const auto& idx : enumerate_indices(k, n)) fn(std::vector<int>(idx.indices().begin(), idx.indices().end()));
}

}  // namespace

std::vector<TransformRep> transform_tuple(const GaussField& f) {
  std::vector<TransformRep> out;
  for (int k = 0; k <= f.rank(); ++k) out.push_back(TransformRep::transform(k, f));
  return out;
}

TransformRep multiply_xi_monomial(const TransformRep& rep, const std::vector<int>& power) {
  TransformRep out(rep.dim());
  for (const auto& [key, field] : rep.summands()) {
    RepKey k = key;
    for (std::size_t i = 0; i < power.size(); ++i) k.xi_power[i] += power[i];
    out.add(k, field);
  }
  return out;
}

TransformRep reduce_via_transport(const TransformRep& psi_m, const std::vector<int>& target) {
  const int m = static_cast<int>(target.size());
  std::vector<TransformRep> powers{psi_m};
  for (int r = 1; r <= m; ++r) powers.push_back(transport(powers.back()));
  TransformRep out(psi_m.dim());
  const double front = (m % 2 ? -1.0 : 1.0) / static_cast<double>(factorial(m));
  for (int k = 0; k <= m; ++k) {
    const double ck = front / static_cast<double>(factorial(m - k));
    for (const auto& [split, w] : symmetrized_splits(target, k)) {
      out += (ck * w) * derive(powers[static_cast<std::size_t>(m - k)], split.first, split.second);
    }
  }
  return out;
}

TransformRep reduce_via_tuple(std::span<const TransformRep> psi, const std::vector<int>& target) {
  const int m = static_cast<int>(target.size());
  if (static_cast<int>(psi.size()) != m + 1) throw std::domain_error("tuple length must be m+1");
  TransformRep out(psi[0].dim());
  const double front = 1.0 / static_cast<double>(factorial(m));
  for (int k = 0; k <= m; ++k) {
    double ck = front * static_cast<double>(binomial(m, k));
    if (k % 2) ck = -ck;
    for (const auto& [split, w] : symmetrized_splits(target, k)) {
      out += (ck * w) * derive(psi[static_cast<std::size_t>(k)], split.first, split.second);
    }
  }
  return out;
}

ReductionProperties check_reduction_properties(const TransformRep& reduced, const TransformRep& psi_m,
                                               const std::vector<int>& target,
                                               std::span<const PhasePoint> points) {
  const int n = reduced.dim();
  const int m = static_cast<int>(target.size());
  ReductionProperties r;
  const auto base = evaluate_batch(reduced, points);
  const double scale = std::max(1.0, max_abs(base));

  for (double t : {-2.0, -0.5, 0.5, 3.0}) {
    const auto scaled = parallel_map<cplx>(points.size(), [&](std::size_t k) {
      Vec txi = points[k].xi;
      for (auto& c : txi) c *= t;
      return reduced.evaluate(points[k].x, txi) - base[k] / std::abs(t);
    });
    r.homogeneity = std::max(r.homogeneity, max_abs(scaled) / scale);
  }

  const TransformRep moved = transport(reduced);
  const auto moved_values = evaluate_batch(moved, points);
  r.transport = max_abs(moved_values) / scale;

  TransformRep rhs = psi_m;
  for (int s = 0; s <= m; ++s) rhs = transport(rhs);
  rhs = derive(rhs, {}, target);
  const double c = (m % 2 ? -1.0 : 1.0) / std::pow(static_cast<double>(factorial(m)), 2);
  r.transport_corollary = max_diff(moved_values, evaluate_batch(c * rhs, points)) / scale;

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const TransformRep jr = derive(reduced, {i}, {j}) - derive(reduced, {j}, {i});
      r.john = std::max(r.john, max_abs(evaluate_batch(jr, points)) / scale);
    }
  }
  return r;
}

ReductionComparison compare_reductions(const GaussField& f, std::span<const PhasePoint> points) {
  const auto psi = transform_tuple(f);
  const int m = f.rank();
  ReductionComparison c;
  for_each_tuple(f.dim(), m, [&](const std::vector<int>& target) {
    const TransformRep a = reduce_via_transport(psi.back(), target);
    const TransformRep b = reduce_via_tuple(psi, target);
    c.equivalence = std::max(c.equivalence, rel_diff(a, b, points));
    std::vector<int> reversed(target.rbegin(), target.rend());
    c.symmetry = std::max(c.symmetry, rel_diff(a, reduce_via_transport(psi.back(), reversed), points));
    if (m >= 2) {
      std::vector<int> rotated = target;
      std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
      c.symmetry = std::max(c.symmetry, rel_diff(b, reduce_via_tuple(psi, rotated), points));
    }
  });
  return c;
}

RecoveryReport check_recovery(const GaussField& f, std::span<const PhasePoint> points) {
  const int m = f.rank();
  const int n = f.dim();
  const auto psi = transform_tuple(f);
  RecoveryReport r;

  std::map<std::vector<int>, TransformRep> reduced;
  for_each_tuple(n, m, [&](const std::vector<int>& target) {
    const TransformRep component = TransformRep::transform(0, component_field(f, target));
    const TransformRep via_tuple = reduce_via_tuple(psi, target);
    r.component_via_tuple = std::max(r.component_via_tuple, rel_diff(via_tuple, component, points));
    r.component_via_transport = std::max(
        r.component_via_transport, rel_diff(reduce_via_transport(psi.back(), target), component, points));
    reduced.emplace(target, via_tuple);
  });

  for (int k = 0; k <= m; ++k) {
    for_each_tuple(n, k, [&](const std::vector<int>& js) {
      const TransformRep lhs = derive(psi[static_cast<std::size_t>(k)], js, {});

      TransformRep coeff_sum(n);
      for (int p = 0; p <= k; ++p) {
        const double a = coefficient_a(m, k, p).get_d();
        if (a == 0.0) continue;
        for (const auto& [split, w] : symmetrized_splits(js, p)) {
          coeff_sum += (a * w) * derive(psi[static_cast<std::size_t>(p)], split.first, split.second);
        }
      }
      r.coefficient_sum = std::max(r.coefficient_sum, rel_diff(lhs, coeff_sum, points));

      TransformRep tsum(n);
      for (int l = m - k; l <= m; ++l) {
        double c = static_cast<double>(factorial(k)) / static_cast<double>(factorial(k + l - m)) *
                   static_cast<double>(binomial(m, l)) / static_cast<double>(factorial(m));
        if (m % 2) c = -c;
        TransformRep term = derive(psi[static_cast<std::size_t>(l)], {}, js);
        for (int s = 0; s < l; ++s) term = transport(term);
        tsum += c * term;
      }
      r.transport_sum = std::max(r.transport_sum, rel_diff(lhs, tsum, points));

      TransformRep contracted(n);
      for (const auto& [target, red] : reduced) {
        const MultiIndex idx(target, n);
        contracted += static_cast<double>(idx.multiplicity()) *
                      multiply_xi_monomial(derive(red, {}, js), idx.counts(n));
      }
      r.contracted_reduction = std::max(r.contracted_reduction, rel_diff(lhs, contracted, points));
    });
  }

  const MomentumDataSet data = MomentumDataSet::from_field(f);
  for (int k = 0; k <= m; ++k) {
    const auto lifted_values = parallel_map<cplx>(points.size(), [&](std::size_t s) {
      return lift_psi(data, k, points[s].x, points[s].xi);
    });
    const auto direct = evaluate_batch(psi[static_cast<std::size_t>(k)], points);
    r.lift = std::max(r.lift, max_diff(lifted_values, direct) / std::max(1.0, max_abs(direct)));
  }
  return r;
}

}  // namespace mrt
