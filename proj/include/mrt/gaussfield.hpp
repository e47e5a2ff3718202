#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mrt/symtensor.hpp"

namespace mrt {

/// coeff * prod_i (x_i - c_i)^{power_i} * exp(-width * |x - c|^2)
struct GaussTerm {
  cplx coeff;
  std::vector<int> power;
  double width = 1.0;
  Vec center;

  cplx value(std::span<const double> x) const;
  int degree() const;
};

using TermList = std::vector<GaussTerm>;

/// Merge terms sharing (power, width, center) and drop exact zeros. The
/// result is sorted by that key, so equal fields normalize identically.
void normalize_terms(TermList& terms);

/// Symmetric tensor field whose components are finite sums of GaussTerms.
/// Components are stored once per sorted multi-index.
class GaussField {
 public:
  GaussField(int m, int n);

  int rank() const { return m_; }
  int dim() const { return n_; }
  std::size_t num_components() const { return comps_.size(); }

  const TermList& component(std::size_t pos) const { return comps_[pos]; }
  TermList& component(std::size_t pos) { return comps_[pos]; }
  /// Component lookup with any ordering of the index tuple.
  const TermList& at(const std::vector<int>& tuple) const;

  void add_term(const std::vector<int>& tuple, GaussTerm term);
  void normalize();
  bool empty() const;
  std::size_t term_count() const;

  SymTensor evaluate(std::span<const double> x) const;

  GaussField& operator+=(const GaussField& other);
  GaussField& operator*=(cplx s);

 private:
  int m_;
  int n_;
  std::vector<TermList> comps_;
};

GaussField operator+(GaussField a, const GaussField& b);
GaussField operator-(GaussField a, const GaussField& b);
GaussField operator*(cplx s, GaussField f);

/// Exact d/dx^i of every component (0-based direction).
GaussField partial_derivative(const GaussField& f, int i);

/// Symmetrized gradient (dv)_{i_1..i_m} = sigma(i_1..i_m) d_{i_m} v_{i_1..i_{m-1}}.
GaussField inner_derivative(const GaussField& v);

/// Rank q-1 field with components f_{j i_2..i_q}.
GaussField partial_contract(const GaussField& f, int j);

/// Component field f_{I} as a rank-0 field.
GaussField component_field(const GaussField& f, const std::vector<int>& tuple);

/// Deterministic pseudo-random field: per component `terms` terms with total
/// degree <= 3, widths in [0.5, 2], centers in the unit ball and
/// coefficients in the unit disc.
GaussField random_field(int m, int n, std::uint64_t seed, int terms = 2);

}  // namespace mrt
