#pragma once

#include <map>
#include <span>
#include <vector>

#include "mrt/gaussfield.hpp"

namespace mrt {

/// Point (x, xi) of R^n x (R^n \ 0).
struct PhasePoint {
  Vec x;
  Vec xi;
};

/// Point of the tangent bundle T S^{n-1}: |xi| = 1 and <x, xi> = 0.
class TSPoint {
 public:
  static constexpr double kTolerance = 1e-12;
  static constexpr double kReprojectTolerance = 1e-9;

  /// Accepts points within kReprojectTolerance of T S^{n-1}, re-projecting
  /// them (xi := xi/|xi|, x := x - <x,xi> xi); throws std::domain_error
  /// otherwise.
  static TSPoint make(Vec x, Vec xi);

  const Vec& x() const { return x_; }
  const Vec& xi() const { return xi_; }
  PhasePoint phase() const { return {x_, xi_}; }

 private:
  TSPoint(Vec x, Vec xi) : x_(std::move(x)), xi_(std::move(xi)) {}
  Vec x_;
  Vec xi_;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);

/// J^{p,q} g (x, xi) = int t^p <g(x + t xi), xi^q> dt for a rank-q field g,
/// evaluated exactly with a Gauss-Hermite rule sized per term.
cplx momentum_transform(int p, const GaussField& g, std::span<const double> x,
                        std::span<const double> xi);

/// Single-term line integral int t^p term(x + t xi) dt.
cplx term_line_integral(int p, const GaussTerm& term, std::span<const double> x,
                        std::span<const double> xi);

/// I^k f at a point of T S^{n-1}.
cplx ray_transform_I(int k, const GaussField& f, const TSPoint& point);

/// Summand key of a TransformRep: xi^{xi_power} * J^{p,q}(field).
struct RepKey {
  std::vector<int> xi_power;
  int p = 0;
  int q = 0;
  auto operator<=>(const RepKey&) const = default;
};

/// Finite sum  sum_s xi^{beta_s} J^{p_s,q_s}(g_s)  of momentum transforms of
/// fields from the Gaussian family, closed under d/dx^i, d/dxi^j and
/// <xi, d_x>. Summands with equal keys are merged by adding their fields.
class TransformRep {
 public:
  explicit TransformRep(int n) : n_(n) {}

  /// J^{p,q}(g) with q = rank of g.
  static TransformRep transform(int p, const GaussField& g);

  int dim() const { return n_; }
  const std::map<RepKey, GaussField>& summands() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t term_count() const;

  void add(const RepKey& key, const GaussField& field, cplx coeff = 1.0);

  TransformRep& operator+=(const TransformRep& other);
  TransformRep& operator-=(const TransformRep& other);
  TransformRep& operator*=(cplx s);

  cplx evaluate(std::span<const double> x, std::span<const double> xi) const;
  cplx evaluate(const PhasePoint& pt) const { return evaluate(pt.x, pt.xi); }
  /// Sum of absolute values of the summand contributions at (x, xi).
  double magnitude(std::span<const double> x, std::span<const double> xi) const;

 private:
  int n_;
  std::map<RepKey, GaussField> terms_;
};

TransformRep operator+(TransformRep a, const TransformRep& b);
TransformRep operator-(TransformRep a, const TransformRep& b);
TransformRep operator*(cplx s, TransformRep r);

TransformRep derive_x(const TransformRep& rep, int i);
TransformRep derive_xi(const TransformRep& rep, int j);

/// Applies d/dx^{i} for each entry of `x_dirs`, then d/dxi^{j} for each entry
/// of `xi_dirs` (0-based directions; repeated entries mean higher order).
TransformRep derive(const TransformRep& rep, const std::vector<int>& x_dirs,
                    const std::vector<int>& xi_dirs);

/// <xi, d_x> rep = sum_i xi^i d/dx^i rep.
TransformRep transport(const TransformRep& rep);

/// <xi, d_x> via integration by parts along the line:
/// xi^b J^{p,q}(g) -> -p xi^b J^{p-1,q}(g).
TransformRep transport_by_parts(const TransformRep& rep);

}  // namespace mrt
