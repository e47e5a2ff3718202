// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mrt/johnop.hpp"
#include "mrt/lift.hpp"
#include "mrt/planar2d.hpp"
#include "mrt/reduction.hpp"
#include "mrt/sampling.hpp"
#include "mrt/symtensor.hpp"
#include "mrt/weyl.hpp"

using namespace mrt;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome coefficient_identity() {
  const auto t0 = std::chrono::steady_clock::now();
  int triples = 0, wrong = 0;
  for (int m = 0; m <= 6; ++m)
    for (int k = 0; k <= m; ++k)
      for (int p = 0; p <= k; ++p) {
        ++triples;
        wrong += coefficient_a(m, k, p) != coefficient_a_closed(m, k, p);
      }
  const double t = seconds_since(t0);
  return {wrong == 0 && t < 1.0, std::to_string(triples - wrong) + "/" + std::to_string(triples) +
                                     " triples exact, " + num(t) + " s (limit 1 s)"};
}

Outcome operator_identities() {
  const auto t0 = std::chrono::steady_clock::now();
  const IdentitySweep a = sweep_commutator_lemma(3, 3, 4);
  const IdentitySweep b = sweep_corollary(3, 3);
  const double t = seconds_since(t0);
  return {a.failures == 0 && b.failures == 0 && t < 30.0,
          "commutator " + std::to_string(a.instances - a.failures) + "/" + std::to_string(a.instances) +
              ", corollary " + std::to_string(b.instances - b.failures) + "/" + std::to_string(b.instances) +
              " exact, " + num(t) + " s (limit 30 s)"};
}

Outcome necessity() {
  const auto t0 = std::chrono::steady_clock::now();
  double even = 0, john = 0;
  std::size_t chains = 0;
  for (int m = 0; m <= 2; ++m)
    for (int n : {3, 4})
      for (int s = 0; s < 5; ++s) {
        const std::uint64_t seed = 500 + 100 * m + 10 * n + s;
        const GaussField f = random_field(m, n, seed);
        const MomentumDataSet d = MomentumDataSet::from_field(f);
        const auto ts = random_ts_points(n, 20, seed + 1);
        for (int k = 0; k <= m; ++k) even = std::max(even, check_evenness(d, k, ts));
        const RangeSweep sw = john_range_sweep(f, random_phase_points(n, 20, seed + 2), 100);
        john = std::max(john, sw.max_relative);
        chains += sw.chains;
      }
  const double t = seconds_since(t0);
  return {even < 1e-12 && john < 1e-8 && t < 60.0,
          "evenness " + num(even) + " (< 1e-12), " + std::to_string(chains) + " chains max relative " + num(john) +
              " (< 1e-8), " + num(t) + " s (limit 60 s)"};
}

Outcome negative_control() {
  const NegativeControl nc = negative_control_experiment(3, 2024);
  return {nc.ratio >= 1e3, "ratio " + num(nc.ratio) + " (>= 1e3), valid " + num(nc.valid_residual) + ", perturbed " +
                               num(nc.perturbed_residual)};
}

Outcome lift_coherence() {
  double lift = 0, restr = 0, hom = 0, shift = 0;
  const std::vector<double> ts{-2.0, -0.5, 0.5, 3.0}, shifts{-1.0, 0.3, 1.7};
  for (int m = 0; m <= 2; ++m) {
    const GaussField f = random_field(m, 3, 600 + m);
    const MomentumDataSet d = MomentumDataSet::from_field(f);
    const auto pts = random_phase_points(3, 50, 610 + m);
    const auto on = random_ts_points(3, 50, 620 + m);
    for (int k = 0; k <= m; ++k) {
      lift = std::max(lift, check_lift_against_transform(f, k, pts));
      restr = std::max(restr, check_restriction(d, k, on));
      hom = std::max(hom, check_homogeneity(d, k, pts, ts));
      shift = std::max(shift, check_shift(d, k, pts, shifts));
    }
  }
  return {lift < 1e-11 && restr < 1e-14 && hom < 1e-11 && shift < 1e-11,
          "lift " + num(lift) + " (< 1e-11), restriction " + num(restr) + " (< 1e-14), homogeneity " + num(hom) +
              ", shift " + num(shift) + " (< 1e-11)"};
}

Outcome transport_ladder() {
  double worst = 0;
  int cases = 0;
  for (int m = 0; m <= 2; ++m) {
    const GaussField f = random_field(m, 3, 700 + m);
    const auto pts = random_phase_points(3, 20, 710 + m);
    for (int k = 0; k <= m; ++k)
      for (int l = 0; l <= m; ++l) {
        worst = std::max(worst, transport_ladder_residual(f, k, l, pts));
        ++cases;
      }
  }
  return {worst < 1e-10, std::to_string(cases) + " (k,l,m) cases incl. l > k, max " + num(worst) + " (< 1e-10)"};
}

Outcome reduction() {
  const auto t0 = std::chrono::steady_clock::now();
  double equiv = 0, props = 0, recovery = 0;
  for (int m = 0; m <= 2; ++m) {
    const GaussField f = random_field(m, 3, 800 + m);
    const auto pts = random_phase_points(3, 20, 810 + m);
    const ReductionComparison c = compare_reductions(f, pts);
    equiv = std::max(equiv, c.equivalence);
    props = std::max(props, c.symmetry);
    const auto psi = transform_tuple(f);
    for (const auto& idx : enumerate_indices(m, 3)) {
      const std::vector<int> target(idx.indices().begin(), idx.indices().end());
      const ReductionProperties p =
          check_reduction_properties(reduce_via_transport(psi.back(), target), psi.back(), target, pts);
      props = std::max({props, p.homogeneity, p.transport, p.transport_corollary, p.john});
    }
    const RecoveryReport r = check_recovery(f, pts);
    recovery = std::max({recovery, r.component_via_tuple, r.component_via_transport, r.coefficient_sum,
                         r.transport_sum, r.contracted_reduction, r.lift});
  }
  const double t = seconds_since(t0);
  return {equiv < 1e-10 && props < 1e-9 && recovery < 1e-9 && t < 120.0,
          "equivalence " + num(equiv) + " (< 1e-10), properties " + num(props) + ", recovery " + num(recovery) +
              " (< 1e-9), " + num(t) + " s (limit 120 s)"};
}

Outcome planar() {
  double fit = 0, coeff = 0, inner = 0, chi = 0, consistency = 0;
  for (int m = 0; m <= 2; ++m) {
    const GaussField f = random_field(m, 2, 900 + m);
    for (const auto& row : moment_fits(f, 3)) {
      fit = std::max(fit, row.fit_residual);
      coeff = std::max(coeff, row.coefficient_error);
    }
    const auto ts = random_ts_points(2, 20, 910 + m);
    inner = std::max(inner, inner_derivative_residual(random_field(m, 2, 920 + m), ts));
    const MomentTable mu(f), nu(f);
    consistency = std::max(consistency, consistency_check(mu, nu, 3).all);
    if (m == 0) continue;
    const GaussField v = random_field(m - 1, 2, 930 + m);
    const GaussField g = f - inner_derivative(v);
    const MomentumDataSet x = chi_recursion(MomentumDataSet::from_field(f), g);
    for (int k = 0; k < m; ++k)
      for (const auto& p : ts) chi = std::max(chi, std::abs(x.phi(k, p) - ray_transform_I(k, v, p)));
  }
  return {fit < 1e-9 && coeff < 1e-9 && inner < 1e-11 && chi < 1e-10 && consistency <= 1e-12,
          "fit " + num(fit) + ", coefficients " + num(coeff) + " (< 1e-9), inner derivative " + num(inner) +
              " (< 1e-11), chi " + num(chi) + " (< 1e-10), consistency " + num(consistency) + " (<= 1e-12)"};
}

Outcome fd_order() {
  const TransformRep psi = TransformRep::transform(1, random_field(1, 3, 1000));
  const auto pts = random_phase_points(3, 10, 1001);
  const std::vector<double> steps{4e-3, 2e-3, 1e-3};
  const RichardsonResult r = richardson_order(psi, 0, 1, pts, steps);
  return {r.order >= 1.8, "observed order " + num(r.order) + " (>= 1.8), errors " + num(r.errors[0]) + " " +
                              num(r.errors[1]) + " " + num(r.errors[2])};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"combinatorial identity", coefficient_identity},
      {"operator identities", operator_identities},
      {"necessity (evenness, John chains)", necessity},
      {"negative control", negative_control},
      {"lift coherence", lift_coherence},
      {"transport ladder", transport_ladder},
      {"reduction", reduction},
      {"planar moment conditions", planar},
      {"finite-difference order", fd_order},
  };
  int failed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    Outcome o;
    try {
      o = criteria[c].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", c + 1, criteria[c].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
