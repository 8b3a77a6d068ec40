#ifndef OSP_POLY_HPP
#define OSP_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "osp/exact.hpp"
#include "osp/multi_index.hpp"

namespace osp {

/// Term basis per variable: plain powers x^k or falling factorials
/// x_[k] = x(x-1)...(x-k+1).
enum class Basis { monomial, falling };

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& s);

/// Sparse multivariate polynomial over Exact with a declared basis.
/// Invariants: no stored zero coefficients; all keys have dim() entries.
class Poly {
 public:
  explicit Poly(int dim, Basis basis = Basis::monomial);

  static Poly zero(int dim, Basis basis = Basis::monomial) { return Poly(dim, basis); }
  static Poly constant(int dim, const Exact& c, Basis basis = Basis::monomial);
  /// x_i as a polynomial (same index in either basis).
  static Poly variable(int dim, int i, Basis basis = Basis::monomial);
  /// c0 + sum_i lin[i] * x_i (monomial basis).
  static Poly affine(int dim, const Exact& c0, const std::vector<Exact>& lin);

  int dim() const { return dim_; }
  Basis basis() const { return basis_; }
  const std::map<MultiIndex, Exact>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // max |key|; -1 for the zero polynomial
  Exact coeff(const MultiIndex& k) const;

  /// Adds c * basis_element(k), dropping the term if it cancels.
  void add_term(const MultiIndex& k, const Exact& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  /// Product; both operands must be monomial-basis (falling-basis products
  /// are rejected: convert, multiply, convert back).
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Exact& s, const Poly& p);
  Poly& operator*=(const Exact& s);

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Exact evaluation; falling basis evaluates factorial powers.
  Exact eval(const std::vector<Exact>& point) const;
  /// IEEE double evaluation (convenience; no exactness guarantee).
  double eval_double(const std::vector<double>& point) const;

  /// Per-variable basis change via Stirling numbers; round-trip is identity.
  Poly to_basis(Basis target) const;

  /// Formal partial derivative (monomial basis only).
  Poly derivative(int var, int order = 1) const;

  std::string str() const;  // human-readable, deterministic term order

 private:
  int dim_;
  Basis basis_;
  std::map<MultiIndex, Exact> terms_;
};

/// v^clear_power * q(u[0]/v, ..., u[k-1]/v) expanded exactly as a polynomial.
/// Requires clear_power >= deg(q), monomial basis, and affine u_i, v of a
/// common ambient dimension. This is the stick-factor expansion used by every
/// simplex construction here.
Poly compose_ratio_clear(const Poly& q, int clear_power, const std::vector<Poly>& u, const Poly& v);

/// Univariate convenience overload.
Poly compose_ratio_clear(const Poly& q, int clear_power, const Poly& u, const Poly& v);

/// Substitute affine arguments into q (monomial basis): q(u[0], ..., u[k-1]).
Poly compose_affine(const Poly& q, const std::vector<Poly>& u);

/// Rising factorial of an affine polynomial: base(base+1)...(base+n-1).
Poly rising_factorial_poly(const Poly& base, int n);

/// base^n by repeated multiplication (monomial basis).
Poly poly_pow(const Poly& base, int n);

}  // namespace osp

#endif
