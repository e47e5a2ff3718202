#include "doctest.h"
#include "mrt/field_io.hpp"
#include "mrt/gaussfield.hpp"

#include <cmath>

using namespace mrt;

namespace {

GaussTerm term(cplx c, std::vector<int> power, double width, Vec center) {
  return GaussTerm{c, std::move(power), width, std::move(center)};
}

}  // namespace

TEST_CASE("term value matches the closed form") {
  const GaussTerm t = term({2, -1}, {1, 0, 2}, 0.7, {0.1, -0.2, 0.3});
  const Vec x{0.5, 0.4, -1.0};
  const double w0 = 0.4, w2 = -1.3;
  const double r2 = 0.4 * 0.4 + 0.6 * 0.6 + 1.3 * 1.3;
  const cplx expect = cplx(2, -1) * w0 * w2 * w2 * std::exp(-0.7 * r2);
  CHECK(std::abs(t.value(x) - expect) < 1e-15);
}

TEST_CASE("add_term rejects malformed terms") {
  GaussField f(1, 2);
  CHECK_THROWS_AS(f.add_term({0}, term(1, {0}, 1, {0, 0})), std::domain_error);
  CHECK_THROWS_AS(f.add_term({0}, term(1, {0, 0}, 0.0, {0, 0})), std::domain_error);
  CHECK_THROWS_AS(f.add_term({0, 1}, term(1, {0, 0}, 1, {0, 0})), std::domain_error);
  CHECK_THROWS_AS(f.add_term({2}, term(1, {0, 0}, 1, {0, 0})), std::domain_error);
}

TEST_CASE("normalize merges equal terms and drops cancelled ones") {
  GaussField f(0, 2);
  f.add_term({}, term(1.5, {1, 0}, 1, {0, 0}));
  f.add_term({}, term(-1.5, {1, 0}, 1, {0, 0}));
  f.add_term({}, term(1.0, {0, 0}, 2, {0, 0}));
  f.add_term({}, term(0.5, {0, 0}, 2, {0, 0}));
  f.normalize();
  REQUIRE(f.term_count() == 1);
  CHECK(f.component(0)[0].coeff == cplx(1.5));
  GaussField g = f - f;
  CHECK(g.empty());
}

TEST_CASE("partial derivative agrees with central differences") {
  const GaussField f = random_field(2, 3, 11);
  const Vec x{0.3, -0.4, 0.8};
  const double h = 1e-5;
  for (int i = 0; i < 3; ++i) {
    const GaussField d = partial_derivative(f, i);
    Vec xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    const SymTensor a = d.evaluate(x), fp = f.evaluate(xp), fm = f.evaluate(xm);
    for (std::size_t c = 0; c < a.size(); ++c) {
      CHECK(std::abs(a.component(c) - (fp.component(c) - fm.component(c)) / (2 * h)) < 1e-8);
    }
  }
}

TEST_CASE("inner derivative is the symmetrized gradient") {
  const GaussField v = random_field(1, 3, 5);
  const GaussField dv = inner_derivative(v);
  CHECK(dv.rank() == 2);
  const Vec x{0.2, 0.1, -0.5};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const cplx expect = 0.5 * (partial_derivative(v, j).evaluate(x).at({i}) +
                                 partial_derivative(v, i).evaluate(x).at({j}));
      CHECK(std::abs(dv.evaluate(x).at({i, j}) - expect) < 1e-14);
    }
  }
}

TEST_CASE("partial contraction and component field") {
  const GaussField f = random_field(2, 3, 9);
  const Vec x{0.3, 0.2, 0.1};
  const GaussField c = partial_contract(f, 1);
  CHECK(c.rank() == 1);
  for (int i = 0; i < 3; ++i) CHECK(c.evaluate(x).at({i}) == f.evaluate(x).at({1, i}));
  const GaussField s = component_field(f, {2, 0});
  CHECK(s.rank() == 0);
  CHECK(s.evaluate(x).component(0) == f.evaluate(x).at({0, 2}));
}

TEST_CASE("random fields are deterministic and decay") {
  const GaussField a = random_field(2, 3, 42), b = random_field(2, 3, 42), c = random_field(2, 3, 43);
  CHECK(field_to_json(a) == field_to_json(b));
  CHECK(field_to_json(a) != field_to_json(c));
  // |x| = 10 with centers in the unit ball, width >= 1/2, degree <= 3:
  // each term is at most 11^3 exp(-81/2).
  const double bound = 2 * std::pow(11.0, 3) * std::exp(-40.5);
  for (int s = 0; s < 20; ++s) {
    Vec x{10 * std::cos(s), 10 * std::sin(s) * 0.6, 10 * std::sin(s) * 0.8};
    const SymTensor v = a.evaluate(x);
    for (auto comp : v.components()) CHECK(std::abs(comp) <= bound);
  }
}

TEST_CASE("field JSON round trip") {
  const GaussField f = random_field(2, 3, 3);
  const GaussField g = field_from_json(field_to_json(f));
  const Vec x{0.1, 0.7, -0.3};
  const SymTensor a = f.evaluate(x), b = g.evaluate(x);
  for (std::size_t c = 0; c < a.size(); ++c) CHECK(a.component(c) == b.component(c));
}

TEST_CASE("field JSON errors carry positions") {
  try {
    field_from_json("{\"m\": 1,\n \"n\": 3,\n \"components\": [}");
    FAIL("expected an error");
  } catch (const FieldSpecError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 0);
  }
  CHECK_THROWS_AS(field_from_json("{\"m\": 1}"), FieldSpecError);
  CHECK_THROWS_AS(
      field_from_json(R"({"m":1,"n":2,"components":[{"index":[3],"terms":[]}]})"), FieldSpecError);
}
