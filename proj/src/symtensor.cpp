#include "mrt/symtensor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mrt {

namespace {

mpz_class exact_binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

mpz_class exact_factorial(long k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> indices, int dim) : idx_(std::move(indices)) {
  for (int v : idx_) {
    if (v < 0 || v >= dim) {
      throw std::domain_error("multi-index entry " + std::to_string(v) +
                              " outside [0, " + std::to_string(dim) + ")");
    }
  }
  std::sort(idx_.begin(), idx_.end());
}

std::int64_t MultiIndex::multiplicity() const {
  std::int64_t result = factorial(rank());
  std::size_t s = 0;
  while (s < idx_.size()) {
    std::size_t e = s;
    while (e < idx_.size() && idx_[e] == idx_[s]) ++e;
    result /= factorial(static_cast<int>(e - s));
    s = e;
  }
  return result;
}

std::vector<int> MultiIndex::counts(int dim) const {
  std::vector<int> c(dim, 0);
  for (int v : idx_) ++c[v];
  return c;
}

std::int64_t factorial(int k) {
  if (k < 0 || k > 20) throw std::domain_error("factorial argument out of range");
  std::int64_t r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t dimension(int m, int n) {
  if (m < 0) throw std::domain_error("tensor rank must be non-negative");
  if (n < 1) throw std::domain_error("dimension must be at least 1");
  return binomial(n + m - 1, m);
}

std::vector<MultiIndex> enumerate_indices(int m, int n) {
  dimension(m, n);
  std::vector<MultiIndex> out;
  std::vector<int> cur(m, 0);
  while (true) {
    out.emplace_back(cur, n);
    int s = m - 1;
    while (s >= 0 && cur[s] == n - 1) --s;
    if (s < 0) break;
    ++cur[s];
    for (int t = s + 1; t < m; ++t) cur[t] = cur[s];
  }
  return out;
}

std::size_t index_rank(const MultiIndex& idx, int n) {
  // Count non-decreasing sequences that are lexicographically smaller.
  const int m = idx.rank();
  std::size_t rank = 0;
  int lo = 0;
  for (int s = 0; s < m; ++s) {
    const int rest = m - s - 1;
    for (int v = lo; v < idx[s]; ++v) {
      rank += static_cast<std::size_t>(binomial((n - v) + rest - 1, rest));
    }
    lo = idx[s];
  }
  return rank;
}

SymTensor::SymTensor(int m, int n)
    : m_(m), n_(n), comps_(static_cast<std::size_t>(dimension(m, n))) {}

cplx SymTensor::at(const std::vector<int>& tuple) const {
  if (static_cast<int>(tuple.size()) != m_) throw std::domain_error("index tuple has wrong length");
  return comps_[index_rank(MultiIndex(tuple, n_), n_)];
}

cplx& SymTensor::at(const std::vector<int>& tuple) {
  if (static_cast<int>(tuple.size()) != m_) throw std::domain_error("index tuple has wrong length");
  return comps_[index_rank(MultiIndex(tuple, n_), n_)];
}

SymTensor symmetrize(const std::map<std::vector<int>, cplx>& raw, int m, int n) {
  for (const auto& [tuple, value] : raw) {
    if (static_cast<int>(tuple.size()) != m) throw std::domain_error("raw tuple has wrong length");
    for (int v : tuple) {
      if (v < 0 || v >= n) throw std::domain_error("raw tuple entry out of range");
    }
  }
  SymTensor out(m, n);
  const double inv = 1.0 / static_cast<double>(factorial(m));
  const auto indices = enumerate_indices(m, n);
  std::vector<int> perm(m);
  for (std::size_t pos = 0; pos < indices.size(); ++pos) {
    const auto base = indices[pos].indices();
    std::iota(perm.begin(), perm.end(), 0);
    cplx sum = 0;
    std::vector<int> tuple(m);
    do {
      for (int s = 0; s < m; ++s) tuple[s] = base[perm[s]];
      if (auto it = raw.find(tuple); it != raw.end()) sum += it->second;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.component(pos) = sum * inv;
  }
  return out;
}

double monomial(const MultiIndex& idx, std::span<const double> xi) {
  double r = 1.0;
  for (int v : idx.indices()) r *= xi[v];
  return r;
}

cplx contract_direction(const SymTensor& f, std::span<const double> xi) {
  if (static_cast<int>(xi.size()) != f.dim()) throw std::domain_error("direction has wrong dimension");
  const auto indices = enumerate_indices(f.rank(), f.dim());
  cplx sum = 0;
  for (std::size_t pos = 0; pos < indices.size(); ++pos) {
    sum += static_cast<double>(indices[pos].multiplicity()) * f.component(pos) *
           monomial(indices[pos], xi);
  }
  return sum;
}

cplx contract_raw(const std::map<std::vector<int>, cplx>& raw, std::span<const double> xi) {
  cplx sum = 0;
  for (const auto& [tuple, value] : raw) {
    double w = 1.0;
    for (int v : tuple) {
      if (v < 0 || v >= static_cast<int>(xi.size())) throw std::domain_error("raw tuple entry out of range");
      w *= xi[v];
    }
    sum += value * w;
  }
  return sum;
}

mpq_class coefficient_a(int m, int k, int p) {
  if (!(0 <= p && p <= k && k <= m)) throw std::domain_error("coefficient_a requires 0 <= p <= k <= m");
  mpq_class sum = 0;
  for (int l = std::max(m - k, p); l <= m; ++l) {
    mpz_class term = exact_factorial(k) * exact_factorial(l) * exact_binomial(m, l) *
                     exact_binomial(l, p);
    mpq_class q(term, exact_factorial(k + l - m));
    q.canonicalize();
    if (l % 2 != 0) q = -q;
    sum += q;
  }
  mpq_class pre(exact_binomial(k, p), exact_factorial(m));
  pre.canonicalize();
  if (m % 2 != 0) pre = -pre;
  return pre * sum;
}

mpq_class coefficient_a_closed(int m, int k, int p) {
  if (!(0 <= p && p <= k && k <= m)) throw std::domain_error("coefficient_a requires 0 <= p <= k <= m");
  return p == k ? 1 : 0;
}

mpq_class coefficient_c(int m, int k, int p) {
  if (p < 0 || k < 0 || k > m) throw std::domain_error("coefficient_c requires p >= 0 and 0 <= k <= m");
  mpz_class sum = 0;
  for (int r = 0; r <= k; ++r) {
    mpz_class term = exact_binomial(k, r) * exact_binomial(r + m - k, p);
    if (r % 2 != 0) term = -term;
    sum += term;
  }
  return mpq_class(sum);
}

}  // namespace mrt
