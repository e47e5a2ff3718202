#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mrt {

/// Exponent vector of one normal-ordered Weyl monomial
///   x^a xi^b d_x^c d_xi^d,
/// stored as the concatenation [a | b | c | d], each block of length n.
using WeylKey = std::vector<int>;

/// Element of the Weyl algebra in (x^1..x^n, xi^1..xi^n) with exact rational
/// coefficients. Every term is normal ordered: multiplication operators sit
/// left of all derivatives. Zero coefficients are never stored.
class WeylElement {
 public:
  explicit WeylElement(int n) : n_(n) {}

  static WeylElement constant(int n, const mpq_class& c);
  static WeylElement x(int n, int i);
  static WeylElement xi(int n, int i);
  static WeylElement dx(int n, int i);
  static WeylElement dxi(int n, int i);
  /// d^k / dx^{x_dirs} dxi^{xi_dirs} as a single monomial.
  static WeylElement derivative(int n, const std::vector<int>& x_dirs, const std::vector<int>& xi_dirs);

  int dim() const { return n_; }
  const std::map<WeylKey, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const WeylKey& key, const mpq_class& c);

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement& operator*=(const mpq_class& c);

  bool operator==(const WeylElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  std::string to_string() const;

 private:
  int n_;
  std::map<WeylKey, mpq_class> terms_;
};

WeylElement operator+(WeylElement a, const WeylElement& b);
WeylElement operator-(WeylElement a, const WeylElement& b);
WeylElement operator*(const mpq_class& c, WeylElement a);
/// Normal-ordered product using [d_{x^i}, x^j] = [d_{xi^i}, xi^j] = delta_ij.
WeylElement operator*(const WeylElement& a, const WeylElement& b);

WeylElement power(const WeylElement& a, int k);
WeylElement commutator(const WeylElement& a, const WeylElement& b);

/// <xi, d_x> = xi^p d/dx^p
WeylElement transport_operator(int n);
/// <xi, d_xi> = xi^p d/dxi^p
WeylElement euler_operator(int n);
/// d^2/dx^i dxi^j - d^2/dx^j dxi^i
WeylElement john_operator(int n, int i, int j);
/// d/dx^i - xi_i <xi, d_x>
WeylElement x_tilde(int n, int i);
/// d/dxi^i - x_i <xi, d_x> - xi_i <xi, d_xi>
WeylElement xi_tilde(int n, int i);

/// Polynomial in (x, xi) with rational coefficients; key = [x-powers | xi-powers].
class Polynomial {
 public:
  explicit Polynomial(int n) : n_(n) {}
  int dim() const { return n_; }
  const std::map<std::vector<int>, mpq_class>& terms() const { return terms_; }
  void add_term(const std::vector<int>& key, const mpq_class& c);
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const Polynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  Polynomial& operator+=(const Polynomial& o);

  double evaluate(std::span<const double> x, std::span<const double> xi) const;

 private:
  int n_;
  std::map<std::vector<int>, mpq_class> terms_;
};

/// Action of a Weyl element on a polynomial.
Polynomial apply(const WeylElement& op, const Polynomial& poly);

/// Random polynomial with `terms` monomials of total degree <= `degree` and
/// small rational coefficients.
Polynomial random_polynomial(int n, int degree, std::uint64_t seed, int terms = 8);

/// sum_s coeff_s * factors_s[0] * factors_s[1] * ...  kept unexpanded, so it
/// can be normal ordered or applied factor by factor.
struct OperatorProduct {
  mpq_class coeff;
  std::vector<WeylElement> factors;
};
using OperatorSum = std::vector<OperatorProduct>;

WeylElement normal_form(const OperatorSum& expr, int n);
/// Applies each product right-to-left directly to the polynomial, without
/// normal ordering.
Polynomial act(const OperatorSum& expr, const Polynomial& poly);

struct IdentityCheck {
  bool normal_form_equal = false;
  bool action_equal = false;
  int polynomials_tested = 0;
  bool passed() const { return normal_form_equal && action_equal; }
};

/// Both sides of the transport/xi-derivative commutator formula
///   <xi,d_x>^l d^k/dxi^{j_1..j_k}
///     = sigma(j) sum_p (-1)^p C(k,p) l!/(l-p)! d^k/dx^{j_1..j_p}dxi^{j_{p+1}..j_k} <xi,d_x>^{l-p}
OperatorSum commutator_formula_lhs(int n, int l, const std::vector<int>& js);
OperatorSum commutator_formula_rhs(int n, int l, const std::vector<int>& js);

/// Both sides of
///   sigma(j) sum_k 1/(m-k)! <xi,d_x> d^m/dx^{j_1..j_k}dxi^{j_{k+1}..j_m} <xi,d_x>^{m-k}
///     = 1/m! d^m/dxi^{j_1..j_m} <xi,d_x>^{m+1}
OperatorSum transport_corollary_lhs(int n, const std::vector<int>& js);
OperatorSum transport_corollary_rhs(int n, const std::vector<int>& js);

/// Checks an operator identity by exact normal forms and by the action oracle
/// on `polys` random polynomials of degree <= 5.
IdentityCheck verify_identity(const OperatorSum& lhs, const OperatorSum& rhs, int n,
                              std::uint64_t seed, int polys = 10);

IdentityCheck verify_commutator_lemma(int n, int l, const std::vector<int>& js,
                                      std::uint64_t seed = 1, int polys = 10);
IdentityCheck verify_corollary(int n, const std::vector<int>& js, std::uint64_t seed = 1,
                               int polys = 10);

/// Summary over every index tuple for n <= n_max, k <= k_max, l <= l_max.
struct IdentitySweep {
  int instances = 0;
  int failures = 0;
  std::vector<std::string> failed;
};
IdentitySweep sweep_commutator_lemma(int n_max, int k_max, int l_max, int polys = 10);
/// Sorted index tuples only (both sides are symmetric in the indices).
IdentitySweep sweep_corollary(int n_max, int m_max, int polys = 10);

}  // namespace mrt
