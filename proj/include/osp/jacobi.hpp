#ifndef OSP_JACOBI_HPP
#define OSP_JACOBI_HPP

#include <vector>

#include "osp/distributions.hpp"
#include "osp/exact.hpp"
#include "osp/multi_index.hpp"
#include "osp/poly.hpp"

namespace osp {

/// Shifted Jacobi parameters on [0,1]: the weight is Beta(alpha, beta) with
/// density x^(alpha-1) (1-x)^(beta-1) / B(alpha, beta); theta = alpha + beta.
struct JacobiParams {
  Exact alpha, beta;
  Exact theta() const { return alpha + beta; }
};

/// R form: 2F1(-n, n+theta-1; beta; 1-x), normalized so R(1) = 1.
Poly jacobi_r(const JacobiParams& p, int n);
/// R form without positivity validation, for the formal negative-parameter
/// (hypergeometric) mode of the discrete families. Throws only if a
/// coefficient denominator vanishes.
Poly jacobi_r_unchecked(const Exact& alpha, const Exact& beta, int n);
/// P form: R scaled by the value at 1.
Poly jacobi_p(const JacobiParams& p, int n);
/// P_n(1) = (beta)_(n) / (theta+n-1)_(n).
Exact jacobi_value_at_one(const JacobiParams& p, int n);
/// E[P_n^2] under Beta(alpha, beta).
Exact jacobi_p_norm(const JacobiParams& p, int n);
/// E[R_n^2] under Beta(alpha, beta) (the reciprocal of the zeta constant).
Exact jacobi_r_norm(const JacobiParams& p, int n);

/// Koornwinder-type stick construction. Given independent sticks
/// B_j ~ Beta(a_j, b_j) with x_j = B_j prod_{i<j} (1-B_i), builds
///   prod_j R_{n_j}^{(a_j, b_j + 2 N_j)}(B_j) (1-B_j)^{N_j},
/// expanded exactly in the free coordinates x_1..x_k (k = number of sticks),
/// where N_j is the index mass strictly after stick j. Degree |n|.
Poly stick_orthogonal_poly(const std::vector<BetaStick>& sticks, const MultiIndex& n);

/// Its exact squared norm: per stick, the Beta measure-change ratio
/// (b_j)_(2N_j) / (a_j+b_j)_(2N_j) times E[R^2] under Beta(a_j, b_j + 2N_j).
Exact stick_orthogonal_norm(const std::vector<BetaStick>& sticks, const MultiIndex& n);

/// Sticks of a Dirichlet weight: B_j ~ Beta(alpha_j, A_j).
std::vector<BetaStick> dirichlet_sticks(const std::vector<Exact>& alpha);

/// Multivariate Jacobi polynomial R_n^alpha on the simplex (dim d-1),
/// orthogonal under Dirichlet(alpha); n has length d-1.
Poly mv_jacobi(const std::vector<Exact>& alpha, const MultiIndex& n);
/// E[(R_n^alpha)^2] in closed form (matches the moment oracle exactly).
Exact mv_jacobi_norm(const std::vector<Exact>& alpha, const MultiIndex& n);
/// The same constant as customarily printed: a product of per-stick terms
///   n_j! (alpha_j)_(n_j) / [ (A_{j-1})_(n_j - 1) (A_{j-1} + 2 N_{j-1} - 1)
///                            (A_j + 2 N_j)_(n_j) ],
/// which deviates from the oracle for some indices; kept for comparison.
Exact mv_jacobi_norm_printed(const std::vector<Exact>& alpha, const MultiIndex& n);
/// Naive product of tilted univariate norms without the measure-change
/// ratios; also kept only for comparison.
Exact mv_jacobi_norm_naive(const std::vector<Exact>& alpha, const MultiIndex& n);

enum class GemVariant { finite_symmetric, limit };

/// Orthogonal polynomials for stick-breaking weights at finite truncation d
/// (d-1 sticks). The limit variant uses iid Beta(1, theta) sticks (the
/// size-biased limit measure); finite_symmetric uses the size-biased
/// symmetric Dirichlet sticks Beta(theta/d + 1, ((d-1-j)/d) theta).
/// The index must be supported within the first d-1 coordinates.
Poly gem_jacobi(const Exact& theta, int d, const MultiIndex& n, GemVariant v);
Exact gem_jacobi_norm(const Exact& theta, int d, const MultiIndex& n, GemVariant v);
std::vector<BetaStick> gem_limit_sticks(const Exact& theta, int d);
std::vector<BetaStick> size_biased_symmetric_sticks(const Exact& theta, int d);

/// Residual of the one-dimensional diffusion eigen-relation:
///   (1/2) x(1-x) y'' + (1/2)(alpha - theta x) y' + (1/2) n (n + theta - 1) y
/// applied to P_n; identically zero iff P_n is the eigenfunction.
Poly generator_eigen_residual(const JacobiParams& p, int n);

}  // namespace osp

#endif
