#include "mrt/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mrt/symtensor.hpp"

namespace mrt {

namespace {

mpq_class falling(int a, int k) {
  mpz_class r = 1;
  for (int s = 0; s < k; ++s) r *= (a - s);
  return mpq_class(r);
}

mpq_class binom_q(int a, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
  return mpq_class(r);
}

WeylKey zero_key(int n) { return WeylKey(static_cast<std::size_t>(4 * n), 0); }

void check_dir(int n, int i) {
  if (i < 0 || i >= n) throw std::domain_error("Weyl generator index out of range");
}

WeylElement single(int n, int block, int i) {
  check_dir(n, i);
  WeylElement e(n);
  WeylKey k = zero_key(n);
  k[static_cast<std::size_t>(block * n + i)] = 1;
  e.add_term(k, 1);
  return e;
}

// Product of two normal-ordered monomials: moves d^c (left) past the
// multiplication part x^{a'} xi^{b'} (right) with the Leibniz rule, one
// coordinate at a time.
void multiply_monomials(int n, const WeylKey& a, const WeylKey& b, const mpq_class& coeff,
                        WeylElement& out) {
  const int total = 2 * n;  // x coordinates then xi coordinates
  std::vector<int> limit(static_cast<std::size_t>(total));
  for (int c = 0; c < total; ++c) {
    const int deriv = a[static_cast<std::size_t>(2 * n + c)];
    const int mult = b[static_cast<std::size_t>(c)];
    limit[static_cast<std::size_t>(c)] = std::min(deriv, mult);
  }
  std::vector<int> kappa(static_cast<std::size_t>(total), 0);
  while (true) {
    mpq_class w = coeff;
    WeylKey key(static_cast<std::size_t>(4 * n));
    for (int c = 0; c < total; ++c) {
      const auto cu = static_cast<std::size_t>(c);
      const int deriv = a[2 * static_cast<std::size_t>(n) + cu];
      const int mult = b[cu];
      const int k = kappa[cu];
      w *= binom_q(deriv, k) * falling(mult, k);
      key[cu] = a[cu] + mult - k;
      key[2 * static_cast<std::size_t>(n) + cu] = deriv - k + b[2 * static_cast<std::size_t>(n) + cu];
    }
    out.add_term(key, w);
    int c = 0;
    while (c < total) {
      auto cu = static_cast<std::size_t>(c);
      if (kappa[cu] < limit[cu]) {
        ++kappa[cu];
        break;
      }
      kappa[cu] = 0;
      ++c;
    }
    if (c == total) break;
  }
}

std::string tuple_string(const std::vector<int>& js) {
  std::string s = "(";
  for (std::size_t i = 0; i < js.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(js[i] + 1);
  }
  return s + ")";
}

void for_each_tuple(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> t(static_cast<std::size_t>(k), 0);
  while (true) {
    fn(t);
    int s = k - 1;
    while (s >= 0 && t[static_cast<std::size_t>(s)] == n - 1) --s;
    if (s < 0) return;
    ++t[static_cast<std::size_t>(s)];
    for (int r = s + 1; r < k; ++r) t[static_cast<std::size_t>(r)] = 0;
  }
}

}  // namespace

void WeylElement::add_term(const WeylKey& key, const mpq_class& c) {
  if (static_cast<int>(key.size()) != 4 * n_) throw std::domain_error("Weyl key has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeylElement WeylElement::constant(int n, const mpq_class& c) {
  WeylElement e(n);
  e.add_term(zero_key(n), c);
  return e;
}

WeylElement WeylElement::x(int n, int i) { return single(n, 0, i); }
WeylElement WeylElement::xi(int n, int i) { return single(n, 1, i); }
WeylElement WeylElement::dx(int n, int i) { return single(n, 2, i); }
WeylElement WeylElement::dxi(int n, int i) { return single(n, 3, i); }

WeylElement WeylElement::derivative(int n, const std::vector<int>& x_dirs,
                                    const std::vector<int>& xi_dirs) {
  WeylKey k = zero_key(n);
  for (int i : x_dirs) {
    check_dir(n, i);
    ++k[static_cast<std::size_t>(2 * n + i)];
  }
  for (int j : xi_dirs) {
    check_dir(n, j);
    ++k[static_cast<std::size_t>(3 * n + j)];
  }
  WeylElement e(n);
  e.add_term(k, 1);
  return e;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  if (o.n_ != n_) throw std::domain_error("Weyl dimension mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  if (o.n_ != n_) throw std::domain_error("Weyl dimension mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string WeylElement::to_string() const {
  if (terms_.empty()) return "0";
  static const char* names[4] = {"x", "xi", "dx", "dxi"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (int b = 0; b < 4; ++b) {
      for (int i = 0; i < n_; ++i) {
        const int e = k[static_cast<std::size_t>(b * n_ + i)];
        if (e == 0) continue;
        os << "*" << names[b] << (i + 1);
        if (e > 1) os << "^" << e;
      }
    }
  }
  return os.str();
}

WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
WeylElement operator*(const mpq_class& c, WeylElement a) { return a *= c; }

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.dim() != b.dim()) throw std::domain_error("Weyl dimension mismatch");
  WeylElement out(a.dim());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) multiply_monomials(a.dim(), ka, kb, ca * cb, out);
  }
  return out;
}

WeylElement power(const WeylElement& a, int k) {
  if (k < 0) throw std::domain_error("negative operator power");
  WeylElement r = WeylElement::constant(a.dim(), 1);
  for (int s = 0; s < k; ++s) r = r * a;
  return r;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) { return a * b - b * a; }

WeylElement transport_operator(int n) {
  WeylElement t(n);
  for (int p = 0; p < n; ++p) t += WeylElement::xi(n, p) * WeylElement::dx(n, p);
  return t;
}

WeylElement euler_operator(int n) {
  WeylElement t(n);
  for (int p = 0; p < n; ++p) t += WeylElement::xi(n, p) * WeylElement::dxi(n, p);
  return t;
}

WeylElement john_operator(int n, int i, int j) {
  return WeylElement::derivative(n, {i}, {j}) - WeylElement::derivative(n, {j}, {i});
}

WeylElement x_tilde(int n, int i) {
  return WeylElement::dx(n, i) - WeylElement::xi(n, i) * transport_operator(n);
}

WeylElement xi_tilde(int n, int i) {
  return WeylElement::dxi(n, i) - WeylElement::x(n, i) * transport_operator(n) -
         WeylElement::xi(n, i) * euler_operator(n);
}

void Polynomial::add_term(const std::vector<int>& key, const mpq_class& c) {
  if (static_cast<int>(key.size()) != 2 * n_) throw std::domain_error("polynomial key has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

double Polynomial::evaluate(std::span<const double> x, std::span<const double> xi) const {
  double total = 0.0;
  for (const auto& [k, c] : terms_) {
    double v = c.get_d();
    for (int i = 0; i < n_; ++i) {
      v *= std::pow(x[static_cast<std::size_t>(i)], k[static_cast<std::size_t>(i)]);
      v *= std::pow(xi[static_cast<std::size_t>(i)], k[static_cast<std::size_t>(n_ + i)]);
    }
    total += v;
  }
  return total;
}

Polynomial apply(const WeylElement& op, const Polynomial& poly) {
  const int n = op.dim();
  if (poly.dim() != n) throw std::domain_error("Weyl dimension mismatch");
  const auto nn = static_cast<std::size_t>(n);
  Polynomial out(n);
  std::vector<int> key(2 * nn);
  for (const auto& [ko, co] : op.terms()) {
    for (const auto& [kp, cp] : poly.terms()) {
      mpq_class w = co * cp;
      bool zero = false;
      for (std::size_t c = 0; c < 2 * nn && !zero; ++c) {
        const int d = ko[2 * nn + c];
        if (d > kp[c]) {
          zero = true;
          break;
        }
        w *= falling(kp[c], d);
        key[c] = kp[c] - d + ko[c];
      }
      if (!zero) out.add_term(key, w);
    }
  }
  return out;
}

Polynomial random_polynomial(int n, int degree, std::uint64_t seed, int terms) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  std::uniform_int_distribution<int> coord(0, 2 * n - 1);
  std::uniform_int_distribution<int> deg(0, degree);
  Polynomial p(n);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> key(static_cast<std::size_t>(2 * n), 0);
    const int d = deg(rng);
    for (int s = 0; s < d; ++s) ++key[static_cast<std::size_t>(coord(rng))];
    int a = num(rng);
    if (a == 0) a = 1;
    mpq_class c(a, den(rng));
    c.canonicalize();
    p.add_term(key, c);
  }
  return p;
}

WeylElement normal_form(const OperatorSum& expr, int n) {
  WeylElement total(n);
  for (const auto& prod : expr) {
    WeylElement r = WeylElement::constant(n, prod.coeff);
    for (const auto& f : prod.factors) r = r * f;
    total += r;
  }
  return total;
}

Polynomial act(const OperatorSum& expr, const Polynomial& poly) {
  Polynomial total(poly.dim());
  for (const auto& prod : expr) {
    Polynomial r = poly;
    for (auto it = prod.factors.rbegin(); it != prod.factors.rend(); ++it) r = apply(*it, r);
    Polynomial scaled(poly.dim());
    for (const auto& [k, c] : r.terms()) scaled.add_term(k, prod.coeff * c);
    total += scaled;
  }
  return total;
}

namespace {

void append_power(std::vector<WeylElement>& factors, const WeylElement& t, int k) {
  for (int s = 0; s < k; ++s) factors.push_back(t);
}

}  // namespace

OperatorSum commutator_formula_lhs(int n, int l, const std::vector<int>& js) {
  OperatorProduct prod{1, {}};
  append_power(prod.factors, transport_operator(n), l);
  prod.factors.push_back(WeylElement::derivative(n, {}, js));
  return {prod};
}

OperatorSum commutator_formula_rhs(int n, int l, const std::vector<int>& js) {
  const int k = static_cast<int>(js.size());
  const WeylElement t = transport_operator(n);
  OperatorSum out;
  const mpq_class inv_perms(1, static_cast<unsigned long>(factorial(k)));
  // Sum over all k! orderings (repeated values included) so sigma is a plain
  // average.
  std::vector<int> order(static_cast<std::size_t>(k));
  for (int s = 0; s < k; ++s) order[static_cast<std::size_t>(s)] = s;
  do {
    for (int p = 0; p <= k && p <= l; ++p) {
      std::vector<int> xd, xid;
      for (int s = 0; s < k; ++s) {
        const int v = js[static_cast<std::size_t>(order[static_cast<std::size_t>(s)])];
        (s < p ? xd : xid).push_back(v);
      }
      mpq_class c = inv_perms * binom_q(k, p) * falling(l, p);
      if (p % 2) c = -c;
      OperatorProduct prod{c, {WeylElement::derivative(n, xd, xid)}};
      append_power(prod.factors, t, l - p);
      out.push_back(std::move(prod));
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

OperatorSum transport_corollary_lhs(int n, const std::vector<int>& js) {
  const int m = static_cast<int>(js.size());
  const WeylElement t = transport_operator(n);
  const mpq_class inv_perms(1, static_cast<unsigned long>(factorial(m)));
  OperatorSum out;
  std::vector<int> order(static_cast<std::size_t>(m));
  for (int s = 0; s < m; ++s) order[static_cast<std::size_t>(s)] = s;
  do {
    for (int k = 0; k <= m; ++k) {
      std::vector<int> xd, xid;
      for (int s = 0; s < m; ++s) {
        const int v = js[static_cast<std::size_t>(order[static_cast<std::size_t>(s)])];
        (s < k ? xd : xid).push_back(v);
      }
      const mpq_class c = inv_perms / mpq_class(static_cast<unsigned long>(factorial(m - k)));
      OperatorProduct prod{c, {t, WeylElement::derivative(n, xd, xid)}};
      append_power(prod.factors, t, m - k);
      out.push_back(std::move(prod));
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

OperatorSum transport_corollary_rhs(int n, const std::vector<int>& js) {
  const int m = static_cast<int>(js.size());
  OperatorProduct prod{mpq_class(1, static_cast<unsigned long>(factorial(m))),
                       {WeylElement::derivative(n, {}, js)}};
  append_power(prod.factors, transport_operator(n), m + 1);
  return {prod};
}

IdentityCheck verify_identity(const OperatorSum& lhs, const OperatorSum& rhs, int n,
                              std::uint64_t seed, int polys) {
  IdentityCheck r;
  r.normal_form_equal = normal_form(lhs, n) == normal_form(rhs, n);
  r.action_equal = true;
  for (int s = 0; s < polys; ++s) {
    const Polynomial p = random_polynomial(n, 5, seed * 1000003ULL + static_cast<std::uint64_t>(s));
    if (!(act(lhs, p) == act(rhs, p))) r.action_equal = false;
    ++r.polynomials_tested;
  }
  return r;
}

IdentityCheck verify_commutator_lemma(int n, int l, const std::vector<int>& js, std::uint64_t seed,
                                      int polys) {
  if (l < 0) throw std::domain_error("transport power must be non-negative");
  return verify_identity(commutator_formula_lhs(n, l, js), commutator_formula_rhs(n, l, js), n, seed,
                         polys);
}

IdentityCheck verify_corollary(int n, const std::vector<int>& js, std::uint64_t seed, int polys) {
  return verify_identity(transport_corollary_lhs(n, js), transport_corollary_rhs(n, js), n, seed,
                         polys);
}

IdentitySweep sweep_commutator_lemma(int n_max, int k_max, int l_max, int polys) {
  IdentitySweep sw;
  std::uint64_t seed = 1;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; k <= k_max; ++k) {
      for (int l = 0; l <= l_max; ++l) {
        for_each_tuple(n, k, [&](const std::vector<int>& js) {
          ++sw.instances;
          if (!verify_commutator_lemma(n, l, js, seed++, polys).passed()) {
            ++sw.failures;
            sw.failed.push_back("n=" + std::to_string(n) + " l=" + std::to_string(l) + " j=" +
                                tuple_string(js));
          }
        });
      }
    }
  }
  return sw;
}

IdentitySweep sweep_corollary(int n_max, int m_max, int polys) {
  IdentitySweep sw;
  std::uint64_t seed = 7;
  for (int n = 1; n <= n_max; ++n) {
    for (int m = 0; m <= m_max; ++m) {
      for (const auto& idx : enumerate_indices(m, n)) {
        std::vector<int> js(idx.indices().begin(), idx.indices().end());
        ++sw.instances;
        if (!verify_corollary(n, js, seed++, polys).passed()) {
          ++sw.failures;
          sw.failed.push_back("n=" + std::to_string(n) + " j=" + tuple_string(js));
        }
      }
    }
  }
  return sw;
}

}  // namespace mrt
