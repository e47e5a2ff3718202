#include "doctest.h"
#include "mrt/planar2d.hpp"
#include "mrt/sampling.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace mrt;

namespace {

constexpr double kPi = std::numbers::pi;

GaussField planar_gaussian() {
  GaussField f(0, 2);
  f.add_term({}, GaussTerm{1.0, {0, 0}, 1.0, {0.0, 0.0}});
  return f;
}

// Planar field v of rank m-1 and g = f - dv, so that I^0 g = I^0 f.
struct Split {
  GaussField f, g, v;
};

Split potential_split(int m, std::uint64_t seed) {
  const GaussField f = random_field(m, 2, seed);
  const GaussField v = random_field(m - 1, 2, seed + 1000);
  return {f, f - inner_derivative(v), v};
}

}  // namespace

TEST_CASE("basis change matrices") {
  const BasisChange b1 = BasisChange::make(1);
  CHECK(std::abs(b1.A(0, 0) - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(b1.A(0, 1) - cplx(0, 1)) < 1e-15);
  CHECK(std::abs(b1.A(1, 1) - cplx(0, -1)) < 1e-15);
  CHECK(std::abs(b1.B(0, 0) - 0.5) < 1e-15);
  CHECK(std::abs(b1.B(1, 0) - cplx(0, -0.5)) < 1e-15);
  CHECK(std::abs(b1.B(1, 1) - cplx(0, 0.5)) < 1e-15);
  for (int m = 0; m <= 5; ++m) {
    const BasisChange b = BasisChange::make(m);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m + 1, m + 1);
    CHECK((b.A * b.B - id).cwiseAbs().maxCoeff() < 1e-13);
  }
  CHECK_THROWS_AS(real_to_complex(random_field(1, 3, 1)), std::domain_error);
}

TEST_CASE("complex and real contractions coincide") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int m = 0; m <= 3; ++m) {
    const GaussField f = random_field(m, 2, 10 + m);
    const auto tilde = real_to_complex(f);
    const auto check = real_coordinates(f);
    for (int s = 0; s < 5; ++s) {
      const Vec x{u(rng), u(rng)};
      const double x1 = u(rng), x2 = u(rng);
      const cplx zeta(x1, x2);
      cplx a = 0, b = 0;
      for (int j = 0; j <= m; ++j) {
        a += tilde[j].evaluate(x).component(0) * std::pow(zeta, m - j) * std::pow(std::conj(zeta), j);
        b += check[j].evaluate(x).component(0) * std::pow(x1, m - j) * std::pow(x2, j);
      }
      CHECK(std::abs(a - b) < 1e-13);
      CHECK(std::abs(b - contract_direction(f.evaluate(x), Vec{x1, x2})) < 1e-13);
    }
  }
}

TEST_CASE("complex to real round trip") {
  for (int m = 0; m <= 3; ++m) {
    const GaussField f = random_field(m, 2, 20 + m);
    const GaussField back = complex_to_real(real_to_complex(f));
    for (const auto& p : random_phase_points(2, 5, 4)) {
      const SymTensor a = f.evaluate(p.x), b = back.evaluate(p.x);
      for (std::size_t c = 0; c < a.size(); ++c) CHECK(std::abs(a.component(c) - b.component(c)) < 1e-12);
    }
  }
}

TEST_CASE("Gaussian momenta") {
  const GaussField g = planar_gaussian();
  CHECK(std::abs(complex_moment(g, 0, 0) - kPi) < 1e-13);
  CHECK(std::abs(complex_moment(g, 1, 0)) < 1e-14);
  CHECK(std::abs(complex_moment(g, 1, 1) - kPi) < 1e-13);
  CHECK(std::abs(complex_moment(g, 2, 2) - 2 * kPi) < 1e-13);
}

TEST_CASE("complex momenta against brute-force cubature") {
  const GaussField f = random_field(1, 2, 5);
  const MomentTable mu(f);
  const auto tilde = real_to_complex(f);
  // tensor trapezoid rule on [-8, 8]^2, spectrally accurate for these integrands
  const double h = 0.04;
  for (int j = 0; j <= 1; ++j) {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {2, 1}, {0, 3}}) {
      cplx sum = 0;
      for (double x1 = -8; x1 <= 8 + 1e-9; x1 += h) {
        for (double x2 = -8; x2 <= 8 + 1e-9; x2 += h) {
          const cplx z(x1, x2);
          sum += std::pow(z, a) * std::pow(std::conj(z), b) * tilde[j].evaluate(Vec{x1, x2}).component(0);
        }
      }
      CHECK(std::abs(sum * h * h - mu.get(j, a, b)) < 1e-9);
    }
  }
}

TEST_CASE("moment integral of the Gaussian") {
  const GaussField g = planar_gaussian();
  const DataFn phi = [g](const TSPoint& p) { return ray_transform_I(0, g, p); };
  for (double th : {0.0, 0.7, 2.9}) {
    CHECK(std::abs(moment_integral(g, 0, 0, th) - kPi) < 1e-13);
    CHECK(std::abs(moment_integral(g, 0, 1, th)) < 1e-14);
    CHECK(std::abs(moment_integral(phi, 0, th) - kPi) < 1e-12);
    CHECK(std::abs(moment_integral(phi, 3, th)) < 1e-12);
  }
  const MomentTable mu(g);
  const auto p = predicted_polynomial(mu, 0, 0);
  REQUIRE(p.size() == 1);
  CHECK(std::abs(p[0] - kPi) < 1e-13);
}

TEST_CASE("i p zeta is p xi_perp") {
  for (double th : {0.3, 1.9, 4.4}) {
    const cplx zeta = std::polar(1.0, th);
    const double p = 0.8;
    const cplx z = cplx(0.0, 1.0) * p * zeta;
    const Vec xi = unit_direction(th);
    CHECK(std::abs(z.real() + p * xi[1]) < 1e-15);
    CHECK(std::abs(z.imag() - p * xi[0]) < 1e-15);
  }
}

TEST_CASE("exact and sampled moment integrals agree") {
  for (int m = 0; m <= 2; ++m) {
    const GaussField f = random_field(m, 2, 30 + m);
    const MomentumDataSet data = MomentumDataSet::from_field(f);
    for (int k = 0; k <= m; ++k)
      for (int r = 0; r <= 3; ++r)
        for (double th : {0.2, 2.5}) {
          CHECK(std::abs(moment_integral(f, k, r, th) - moment_integral(data.evaluator(k), r, th, 14.0, 0.05)) < 1e-10);
        }
  }
}

TEST_CASE("homogeneous fits") {
  const int d = 3;
  const auto th = circle_angles(d);
  CHECK(th.size() == 20);
  const std::vector<cplx> c{cplx(1, 2), 0.5, cplx(0, -1), 3.0};
  std::vector<cplx> vals, wrong, constant;
  for (double t : th) {
    vals.push_back(evaluate_on_circle(c, t));
    wrong.push_back(std::polar(1.0, (d + 1) * t));
  }
  const HomogeneousFit fit = fit_homogeneous(th, vals, d);
  CHECK(fit.residual < 1e-11);
  for (int s = 0; s <= d; ++s) CHECK(std::abs(fit.coefficients[s] - c[s]) < 1e-12);
  CHECK(fit_homogeneous(th, wrong, d).residual > 0.9);
  const auto th2 = circle_angles(2);
  for (std::size_t t = 0; t < th2.size(); ++t) constant.push_back(2.5);
  const HomogeneousFit cfit = fit_homogeneous(th2, constant, 2);
  CHECK(std::abs(cfit.coefficients[1] - 2.5) < 1e-12);
  CHECK_THROWS_AS(fit_homogeneous({0.0, 1.0}, {1.0, 1.0}, 3), std::domain_error);
  CHECK_THROWS_AS(fit_homogeneous({0.5, 0.5, 0.5, 0.5}, {1.0, 1.0, 1.0, 1.0}, 2), std::domain_error);
}

TEST_CASE("moment conditions hold for planar fields") {
  for (int m = 0; m <= 2; ++m) {
    for (const auto& row : moment_fits(random_field(m, 2, 40 + m), 3)) {
      CAPTURE(m);
      CAPTURE(row.r);
      CAPTURE(row.k);
      CHECK(row.fit_residual < 1e-9);
      CHECK(row.coefficient_error < 1e-9);
    }
  }
  const GaussField zero(1, 2);
  const MomentTable mz(zero);
  for (const auto& c : predicted_polynomial(mz, 2, 1)) CHECK(c == cplx(0.0));
}

TEST_CASE("consistency relations") {
  const GaussField f = random_field(2, 2, 50);
  const MomentTable mu(f), same(f);
  const ConsistencyReport self = consistency_check(mu, same, 4);
  CHECK(self.all == 0.0);
  for (int m = 1; m <= 2; ++m) {
    const Split sp = potential_split(m, 60 + m);
    const MomentTable a(sp.f), b(sp.g);
    const ConsistencyReport rep = consistency_check(a, b, 4);
    CHECK(rep.first < 1e-10);
    CHECK(rep.last < 1e-10);
    CHECK(rep.all < 1e-10);
    // the moment tables themselves differ
    CHECK(std::abs(a.get(0, 1, 1) - b.get(0, 1, 1)) > 1e-6);
  }
}

TEST_CASE("inner derivative relation") {
  for (int m = 0; m <= 2; ++m) {
    CHECK(inner_derivative_residual(random_field(m, 2, 70 + m), random_ts_points(2, 20, 5)) < 1e-11);
    CHECK(inner_derivative_residual(random_field(m, 3, 75 + m), random_ts_points(3, 20, 6)) < 1e-11);
  }
}

TEST_CASE("chi recursion") {
  for (int m = 1; m <= 2; ++m) {
    const Split sp = potential_split(m, 80 + m);
    const MomentumDataSet data = MomentumDataSet::from_field(sp.f);
    const auto pts = random_ts_points(2, 20, 7);
    const MomentumDataSet chi = chi_recursion(data, sp.g);
    CHECK(chi.rank() == m - 1);
    double worst = 0;
    for (int k = 0; k < m; ++k)
      for (const auto& p : pts) worst = std::max(worst, std::abs(chi.phi(k, p) - ray_transform_I(k, sp.v, p)));
    CHECK(worst < 1e-10);
    const MomentumDataSet trivial = chi_recursion(data, sp.f);
    for (int k = 0; k < m; ++k)
      for (const auto& p : pts) CHECK(std::abs(trivial.phi(k, p)) < 1e-11);
    // the new tuple again satisfies the moment conditions one rank lower
    for (const auto& row : moment_fits(chi, 2)) CHECK(row.fit_residual < 1e-9);
  }
}
