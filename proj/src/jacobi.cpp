#include "osp/jacobi.hpp"

#include <stdexcept>

#include "osp/special.hpp"

namespace osp {

namespace {
void check_params(const JacobiParams& p, int n) {
  if (p.alpha.sign() <= 0 || p.beta.sign() <= 0)
    throw std::invalid_argument("jacobi: parameters must be positive");
  if (n < 0) throw std::invalid_argument("jacobi: negative degree");
}
}  // namespace

Poly jacobi_r_unchecked(const Exact& alpha, const Exact& beta, int n) {
  if (n < 0) throw std::invalid_argument("jacobi: negative degree");
  // 2F1(-n, n+theta-1; beta; 1-x) expanded termwise.
  const Exact theta = alpha + beta;
  Poly one_minus_x = Poly::affine(1, Exact(1), {Exact(-1)});
  Poly out(1, Basis::monomial);
  Exact coef(1);
  for (int j = 0; j <= n; ++j) {
    if (j > 0) {
      Exact den = (beta + Exact(j - 1)) * Exact(j);
      if (den.is_zero())
        throw std::domain_error("jacobi_r: coefficient denominator vanishes");
      coef *= (Exact(-n) + Exact(j - 1)) * (Exact(n) + theta - Exact(2) + Exact(j));
      coef /= den;
    }
    out += coef * poly_pow(one_minus_x, j);
  }
  return out;
}

Poly jacobi_r(const JacobiParams& p, int n) {
  check_params(p, n);
  return jacobi_r_unchecked(p.alpha, p.beta, n);
}

Exact jacobi_value_at_one(const JacobiParams& p, int n) {
  check_params(p, n);
  return rising(p.beta, n) / rising(p.theta() + Exact(n - 1), n);
}

Poly jacobi_p(const JacobiParams& p, int n) { return jacobi_value_at_one(p, n) * jacobi_r(p, n); }

Exact jacobi_p_norm(const JacobiParams& p, int n) {
  check_params(p, n);
  return factorial(n) * rising(p.alpha, n) * rising(p.beta, n) /
         (rising(p.theta(), 2 * n) * rising(p.theta() + Exact(n - 1), n));
}

Exact jacobi_r_norm(const JacobiParams& p, int n) {
  check_params(p, n);
  if (n == 0) return Exact(1);
  return factorial(n) * rising(p.alpha, n) /
         ((p.theta() + Exact(2 * n - 1)) * rising(p.theta(), n - 1) * rising(p.beta, n));
}

std::vector<BetaStick> dirichlet_sticks(const std::vector<Exact>& alpha) {
  if (alpha.size() < 2) throw std::invalid_argument("dirichlet_sticks: need d >= 2");
  std::vector<BetaStick> sticks;
  for (size_t j = 0; j + 1 < alpha.size(); ++j) {
    Exact tail(0);
    for (size_t i = j + 1; i < alpha.size(); ++i) tail += alpha[i];
    sticks.push_back({alpha[j], tail});
  }
  return sticks;
}

namespace {

MultiIndex fit_index(const MultiIndex& n, int k) {
  if (n.dim() > k && n.support_end() >= k)
    throw std::invalid_argument("stick polynomial: index support exceeds the stick count");
  std::vector<int> e(k, 0);
  for (int i = 0; i < std::min(n.dim(), k); ++i) e[i] = n[i];
  return MultiIndex(std::move(e));
}

/// Builds the factor chain from stick `j` onward, a polynomial in the
/// ambient free coordinates using variables x_j..; total degree = tail mass.
Poly stick_chain(const std::vector<BetaStick>& sticks, const MultiIndex& n, int j) {
  const int k = static_cast<int>(sticks.size());
  if (j > n.support_end()) return Poly::constant(k, Exact(1));
  const int tail_mass = n.tail_after(j);
  Poly tail = stick_chain(sticks, n, j + 1);
  // tail(x_{j+1}/(1-x_j), ...) cleared by (1-x_j)^{tail_mass}; this clearing
  // factor is exactly the (1-B_j)^{N_j} term of the construction.
  std::vector<Poly> args;
  args.reserve(k);
  for (int i = 0; i < k; ++i) args.push_back(Poly::variable(k, i));
  Poly v = Poly::affine(k, Exact(1), std::vector<Exact>(k, Exact(0)));
  v.add_term(MultiIndex::zeros(k).with(j, 1), Exact(-1));  // 1 - x_j
  Poly shifted = compose_ratio_clear(tail, tail_mass, args, v);
  Poly factor = compose_ratio_clear(
      jacobi_r(JacobiParams{sticks[j].a, sticks[j].b + Exact(2 * tail_mass)}, n[j]), n[j],
      Poly::variable(k, j), Poly::constant(k, Exact(1)));
  return factor * shifted;
}

}  // namespace

Poly stick_orthogonal_poly(const std::vector<BetaStick>& sticks, const MultiIndex& n) {
  const int k = static_cast<int>(sticks.size());
  if (k < 1) throw std::invalid_argument("stick_orthogonal_poly: need at least one stick");
  return stick_chain(sticks, fit_index(n, k), 0);
}

Exact stick_orthogonal_norm(const std::vector<BetaStick>& sticks, const MultiIndex& n0) {
  const int k = static_cast<int>(sticks.size());
  MultiIndex n = fit_index(n0, k);
  Exact r(1);
  for (int j = 0; j < k; ++j) {
    const int tail = n.tail_after(j);
    // E[(1-B)^{2N} R^2] under Beta(a,b): measure-change ratio times the norm
    // under the tilted weight Beta(a, b+2N).
    r *= rising(sticks[j].b, 2 * tail) / rising(sticks[j].a + sticks[j].b, 2 * tail);
    r *= jacobi_r_norm(JacobiParams{sticks[j].a, sticks[j].b + Exact(2 * tail)}, n[j]);
  }
  return r;
}

Poly mv_jacobi(const std::vector<Exact>& alpha, const MultiIndex& n) {
  return stick_orthogonal_poly(dirichlet_sticks(alpha), n);
}

Exact mv_jacobi_norm(const std::vector<Exact>& alpha, const MultiIndex& n) {
  return stick_orthogonal_norm(dirichlet_sticks(alpha), n);
}

Exact mv_jacobi_norm_printed(const std::vector<Exact>& alpha, const MultiIndex& n0) {
  const int k = static_cast<int>(alpha.size()) - 1;
  MultiIndex n = fit_index(n0, k);
  Exact r(1);
  for (int j = 0; j < k; ++j) {
    Exact a_prev(0);  // A_{j-1} in 1-based terms: sum of alpha from j on
    for (size_t i = j; i < alpha.size(); ++i) a_prev += alpha[i];
    Exact a_cur = a_prev - alpha[j];
    const int n_prev = n[j] + n.tail_after(j);
    const int n_cur = n.tail_after(j);
    r *= factorial(n[j]) * rising(alpha[j], n[j]) /
         (rising(a_prev, n[j] - 1) * (a_prev + Exact(2 * n_prev - 1)) *
          rising(a_cur + Exact(2 * n_cur), n[j]));
  }
  return r;
}

Exact mv_jacobi_norm_naive(const std::vector<Exact>& alpha, const MultiIndex& n0) {
  auto sticks = dirichlet_sticks(alpha);
  MultiIndex n = fit_index(n0, static_cast<int>(sticks.size()));
  Exact r(1);
  for (size_t j = 0; j < sticks.size(); ++j) {
    const int tail = n.tail_after(static_cast<int>(j));
    r *= jacobi_r_norm(JacobiParams{sticks[j].a, sticks[j].b + Exact(2 * tail)}, n[static_cast<int>(j)]);
  }
  return r;
}

std::vector<BetaStick> gem_limit_sticks(const Exact& theta, int d) {
  if (theta.sign() <= 0) throw std::invalid_argument("gem sticks: theta must be positive");
  if (d < 2) throw std::invalid_argument("gem sticks: need d >= 2");
  return std::vector<BetaStick>(d - 1, BetaStick{Exact(1), theta});
}

std::vector<BetaStick> size_biased_symmetric_sticks(const Exact& theta, int d) {
  if (theta.sign() <= 0) throw std::invalid_argument("gem sticks: theta must be positive");
  if (d < 2) throw std::invalid_argument("gem sticks: need d >= 2");
  std::vector<BetaStick> sticks;
  for (int j = 1; j <= d - 1; ++j)
    sticks.push_back({theta / Exact(d) + Exact(1), Exact(d - j) * theta / Exact(d)});
  return sticks;
}

namespace {
std::vector<BetaStick> gem_sticks(const Exact& theta, int d, GemVariant v) {
  return v == GemVariant::limit ? gem_limit_sticks(theta, d)
                                : size_biased_symmetric_sticks(theta, d);
}
}  // namespace

Poly gem_jacobi(const Exact& theta, int d, const MultiIndex& n, GemVariant v) {
  return stick_orthogonal_poly(gem_sticks(theta, d, v), n);
}

Exact gem_jacobi_norm(const Exact& theta, int d, const MultiIndex& n, GemVariant v) {
  return stick_orthogonal_norm(gem_sticks(theta, d, v), n);
}

Poly generator_eigen_residual(const JacobiParams& p, int n) {
  Poly pn = jacobi_p(p, n);
  Poly x = Poly::variable(1, 0);
  Poly half = Poly::constant(1, Exact(1, 2));
  Poly drift = Poly::affine(1, p.alpha, {-p.theta()});  // alpha - theta x
  Poly lhs = half * x * (Poly::constant(1, Exact(1)) - x) * pn.derivative(0, 2) +
             half * drift * pn.derivative(0, 1);
  Exact eig = Exact(1, 2) * Exact(n) * (Exact(n) + p.theta() - Exact(1));
  return lhs + eig * pn;
}

}  // namespace osp
