#include "mrt/gaussfield.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <tuple>

namespace mrt {

cplx GaussTerm::value(std::span<const double> x) const {
  double poly = 1.0;
  double r2 = 0.0;
  for (std::size_t i = 0; i < center.size(); ++i) {
    const double w = x[i] - center[i];
    r2 += w * w;
    for (int e = 0; e < power[i]; ++e) poly *= w;
  }
  return coeff * (poly * std::exp(-width * r2));
}

int GaussTerm::degree() const { return std::accumulate(power.begin(), power.end(), 0); }

void normalize_terms(TermList& terms) {
  auto key = [](const GaussTerm& t) { return std::tie(t.power, t.width, t.center); };
  std::sort(terms.begin(), terms.end(),
            [&](const GaussTerm& a, const GaussTerm& b) { return key(a) < key(b); });
  TermList merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && key(merged.back()) == key(t)) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const GaussTerm& t) { return t.coeff == cplx(0.0, 0.0); });
  terms = std::move(merged);
}

GaussField::GaussField(int m, int n)
    : m_(m), n_(n), comps_(static_cast<std::size_t>(dimension(m, n))) {}

const TermList& GaussField::at(const std::vector<int>& tuple) const {
  if (static_cast<int>(tuple.size()) != m_) throw std::domain_error("index tuple has wrong length");
  return comps_[index_rank(MultiIndex(tuple, n_), n_)];
}

void GaussField::add_term(const std::vector<int>& tuple, GaussTerm term) {
  if (static_cast<int>(tuple.size()) != m_) throw std::domain_error("index tuple has wrong length");
  if (static_cast<int>(term.power.size()) != n_ || static_cast<int>(term.center.size()) != n_) {
    throw std::domain_error("term power/center must have the field dimension");
  }
  if (!(term.width > 0.0)) throw std::domain_error("term width must be positive");
  for (int e : term.power) {
    if (e < 0) throw std::domain_error("term powers must be non-negative");
  }
  comps_[index_rank(MultiIndex(tuple, n_), n_)].push_back(std::move(term));
}

void GaussField::normalize() {
  for (auto& c : comps_) normalize_terms(c);
}

bool GaussField::empty() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const TermList& c) { return c.empty(); });
}

std::size_t GaussField::term_count() const {
  std::size_t total = 0;
  for (const auto& c : comps_) total += c.size();
  return total;
}

SymTensor GaussField::evaluate(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n_) throw std::domain_error("evaluation point has wrong dimension");
  SymTensor out(m_, n_);
  for (std::size_t pos = 0; pos < comps_.size(); ++pos) {
    cplx sum = 0;
    for (const auto& t : comps_[pos]) sum += t.value(x);
    out.component(pos) = sum;
  }
  return out;
}

GaussField& GaussField::operator+=(const GaussField& other) {
  if (other.m_ != m_ || other.n_ != n_) throw std::domain_error("field shape mismatch");
  for (std::size_t pos = 0; pos < comps_.size(); ++pos) {
    comps_[pos].insert(comps_[pos].end(), other.comps_[pos].begin(), other.comps_[pos].end());
    normalize_terms(comps_[pos]);
  }
  return *this;
}

GaussField& GaussField::operator*=(cplx s) {
  for (auto& c : comps_) {
    for (auto& t : c) t.coeff *= s;
    normalize_terms(c);
  }
  return *this;
}

GaussField operator+(GaussField a, const GaussField& b) { return a += b; }
GaussField operator-(GaussField a, const GaussField& b) { return a += (-1.0) * b; }
GaussField operator*(cplx s, GaussField f) { return f *= s; }

GaussField partial_derivative(const GaussField& f, int i) {
  if (i < 0 || i >= f.dim()) throw std::domain_error("derivative direction out of range");
  GaussField out(f.rank(), f.dim());
  for (std::size_t pos = 0; pos < f.num_components(); ++pos) {
    TermList& dst = out.component(pos);
    for (const auto& t : f.component(pos)) {
      // d/dx_i [w_i^a e^{-c|w|^2}] = a w_i^{a-1} e^{..} - 2c w_i^{a+1} e^{..}
      if (t.power[i] > 0) {
        GaussTerm lower = t;
        lower.coeff *= static_cast<double>(t.power[i]);
        --lower.power[i];
        dst.push_back(std::move(lower));
      }
      GaussTerm upper = t;
      upper.coeff *= -2.0 * t.width;
      ++upper.power[i];
      dst.push_back(std::move(upper));
    }
    normalize_terms(dst);
  }
  return out;
}

GaussField inner_derivative(const GaussField& v) {
  const int m = v.rank() + 1;
  const int n = v.dim();
  std::vector<GaussField> grads;
  grads.reserve(n);
  for (int i = 0; i < n; ++i) grads.push_back(partial_derivative(v, i));

  GaussField out(m, n);
  const auto indices = enumerate_indices(m, n);
  const double inv = 1.0 / m;
  for (std::size_t pos = 0; pos < indices.size(); ++pos) {
    // For symmetric v, sigma over m! permutations reduces to averaging over
    // which slot carries the derivative.
    const auto idx = indices[pos].indices();
    TermList& dst = out.component(pos);
    for (int s = 0; s < m; ++s) {
      std::vector<int> rest;
      rest.reserve(m - 1);
      for (int t = 0; t < m; ++t) {
        if (t != s) rest.push_back(idx[t]);
      }
      for (auto term : grads[idx[s]].at(rest)) {
        term.coeff *= inv;
        dst.push_back(std::move(term));
      }
    }
    normalize_terms(dst);
  }
  return out;
}

GaussField partial_contract(const GaussField& f, int j) {
  if (f.rank() < 1) throw std::domain_error("partial_contract needs rank >= 1");
  if (j < 0 || j >= f.dim()) throw std::domain_error("contraction index out of range");
  GaussField out(f.rank() - 1, f.dim());
  const auto indices = enumerate_indices(f.rank() - 1, f.dim());
  for (std::size_t pos = 0; pos < indices.size(); ++pos) {
    std::vector<int> tuple(indices[pos].indices().begin(), indices[pos].indices().end());
    tuple.push_back(j);
    out.component(pos) = f.at(tuple);
  }
  return out;
}

GaussField component_field(const GaussField& f, const std::vector<int>& tuple) {
  GaussField out(0, f.dim());
  out.component(0) = f.at(tuple);
  return out;
}

GaussField random_field(int m, int n, std::uint64_t seed, int terms) {
  GaussField f(m, n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> width(0.5, 2.0);
  std::uniform_int_distribution<int> degree(0, 3);
  std::uniform_int_distribution<int> axis(0, n - 1);

  for (std::size_t pos = 0; pos < f.num_components(); ++pos) {
    for (int t = 0; t < terms; ++t) {
      GaussTerm term;
      term.power.assign(n, 0);
      const int d = degree(rng);
      for (int e = 0; e < d; ++e) ++term.power[axis(rng)];
      term.width = width(rng);
      term.center.assign(n, 0.0);
      do {
        for (auto& c : term.center) c = unit(rng);
      } while (std::inner_product(term.center.begin(), term.center.end(), term.center.begin(), 0.0) > 1.0);
      double re = 0, im = 0;
      do {
        re = unit(rng);
        im = unit(rng);
      } while (re * re + im * im > 1.0);
      term.coeff = cplx(re, im);
      f.component(pos).push_back(std::move(term));
    }
    normalize_terms(f.component(pos));
  }
  return f;
}

}  // namespace mrt
