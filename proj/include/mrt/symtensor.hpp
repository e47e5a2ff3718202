#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace mrt {

using cplx = std::complex<double>;
using Vec = std::vector<double>;

/// Non-decreasing index tuple (0-based) addressing one component of a
/// symmetric tensor. The rank-0 index is the empty tuple.
class MultiIndex {
 public:
  MultiIndex() = default;
  /// Sorts `indices`; every entry must lie in [0, dim).
  MultiIndex(std::vector<int> indices, int dim);

  int rank() const { return static_cast<int>(idx_.size()); }
  std::span<const int> indices() const { return idx_; }
  int operator[](int s) const { return idx_[s]; }

  /// Number of distinct orderings of the tuple, m! / prod(count_v!).
  std::int64_t multiplicity() const;
  /// Count of each value 0..dim-1 in the tuple.
  std::vector<int> counts(int dim) const;

  auto operator<=>(const MultiIndex&) const = default;

 private:
  std::vector<int> idx_;
};

/// C(n+m-1, m); throws std::domain_error for m < 0 or n < 1.
std::int64_t dimension(int m, int n);

/// All sorted multi-indices of rank m over n values, in lexicographic order.
std::vector<MultiIndex> enumerate_indices(int m, int n);

/// Position of `idx` in enumerate_indices(m, n).
std::size_t index_rank(const MultiIndex& idx, int n);

std::int64_t factorial(int k);
std::int64_t binomial(int n, int k);

class SymTensor {
 public:
  SymTensor(int m, int n);

  int rank() const { return m_; }
  int dim() const { return n_; }
  std::size_t size() const { return comps_.size(); }

  /// Lookup with any ordering of the index tuple.
  cplx at(const std::vector<int>& tuple) const;
  cplx& at(const std::vector<int>& tuple);
  cplx component(std::size_t pos) const { return comps_[pos]; }
  cplx& component(std::size_t pos) { return comps_[pos]; }
  std::span<const cplx> components() const { return comps_; }

 private:
  int m_;
  int n_;
  std::vector<cplx> comps_;
};

/// Average of `raw` over all permutations of each index tuple. Missing
/// entries count as zero. Tuples must have length m with entries in [0, n).
SymTensor symmetrize(const std::map<std::vector<int>, cplx>& raw, int m, int n);

/// Full contraction f_{i_1..i_m} xi^{i_1}..xi^{i_m}.
cplx contract_direction(const SymTensor& f, std::span<const double> xi);

/// Contraction of an arbitrary (unsymmetrized) raw tensor with xi^m.
cplx contract_raw(const std::map<std::vector<int>, cplx>& raw,
                  std::span<const double> xi);

/// xi^{I} = prod_s xi[I_s].
double monomial(const MultiIndex& idx, std::span<const double> xi);

/// Exact coefficient a(m,k,p) from the alternating sum over l in
/// [max(m-k,p), m]; defined for 0 <= p <= k <= m.
mpq_class coefficient_a(int m, int k, int p);

/// Closed form of a(m,k,p): 0 for p < k, 1 for p = k.
mpq_class coefficient_a_closed(int m, int k, int p);

/// c(m,k,p) = sum_{r=0}^{k} (-1)^r C(k,r) C(r+m-k, p); 0 <= p, 0 <= k <= m.
mpq_class coefficient_c(int m, int k, int p);

}  // namespace mrt
