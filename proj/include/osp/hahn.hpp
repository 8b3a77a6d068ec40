#ifndef OSP_HAHN_HPP
#define OSP_HAHN_HPP

#include <map>
#include <vector>

#include "osp/exact.hpp"
#include "osp/multi_index.hpp"
#include "osp/poly.hpp"

namespace osp {

/// Hahn parameters over {0,...,N}. The weight is DirichletMultinomial
/// (alpha, beta; N). Negative-integer parameters are the formal
/// hypergeometric-weight mode; evaluation throws if a required Pochhammer
/// vanishes.
struct HahnParams {
  Exact alpha, beta;
  long N = 0;
  Exact theta() const { return alpha + beta; }
};

/// h form: 3F2(-n, n+theta-1, -r; alpha, -N; 1) as a degree-n polynomial in
/// r (falling-factorial basis).
Poly hahn_h(const HahnParams& p, int n);
/// h_n(N; N) = (-1)^n (beta)_(n) / (alpha)_(n).
Exact hahn_value_at_N(const HahnParams& p, int n);
/// q form, normalized so q(N) = 1.
Poly hahn_q(const HahnParams& p, int n);
/// E[h_n^2] and E[q_n^2] under DM(alpha, beta; N).
Exact hahn_h_norm(const HahnParams& p, int n);
Exact hahn_q_norm(const HahnParams& p, int n);

/// Posterior-mixture Hahn polynomial: the Beta(alpha+r, beta+N-r) average of
/// the Jacobi polynomial R_n^{alpha,beta}; a degree-n polynomial in r
/// (monomial basis). Satisfies qtilde_n = [N_[n] / (theta+N)_(n)] q_n.
Poly hahn_tilde(const Exact& alpha, const Exact& beta, long N, int n);
/// Pointwise value with arbitrary (possibly r-dependent, possibly negative)
/// parameters; used by the factorized multivariate route.
Exact hahn_tilde_value(const Exact& alpha, const Exact& beta, const Exact& N, int n,
                       const Exact& r);
/// E[qtilde_n^2] under DM: N_[n]/(theta+N)_(n) * E[R_n^2].
Exact hahn_tilde_norm(const HahnParams& p, int n);

/// Multivariate Hahn index: polynomials in the d-1 free counts r_1..r_{d-1}
/// on the lattice simplex { |r| = total }.
struct MVHahnIndex {
  std::vector<Exact> alpha;  // d entries
  MultiIndex n;              // length d-1, |n| <= total
  long total = 0;
};

void validate(const MVHahnIndex& idx);

/// Mixture route: Dirichlet(alpha + r) average of R_n^alpha, denominators
/// cleared exactly; the canonical definition.
Poly mv_hahn_mixture(const MVHahnIndex& idx);

/// Route-switched constructor. The product route evaluates the factorized
/// form over the whole support and returns its polynomial only after
/// verifying it is a constant multiple of the mixture polynomial (the
/// constant is 1 whenever the bracket prefactor is exact).
enum class HahnRoute { mixture, product };
Poly mv_hahn(const MVHahnIndex& idx, HahnRoute route);

/// Factorized route evaluated at a full-length lattice point r (|r|=total):
/// bracket prefactor times the product of univariate posterior-mixture
/// factors. Works verbatim for negative (hypergeometric-mode) parameters.
Exact mv_hahn_product_eval(const MVHahnIndex& idx, const std::vector<long>& r);

/// E[qtilde_n^2] under DM(alpha; total): total_[|n|]/(|alpha|+total)_(|n|)
/// times the Jacobi norm.
Exact mv_hahn_norm(const MVHahnIndex& idx);

/// Posterior-mixture value at a full-length count vector with total |r|
/// taken from the point itself: E_{Dirichlet(alpha + r)}[ R_{nprime}^alpha ].
Exact mv_hahn_tilde_value(const std::vector<Exact>& alpha, const MultiIndex& nprime,
                          const std::vector<long>& r);

/// Pointwise comparison of the two routes over the whole support.
struct RouteComparison {
  bool proportional = false;
  Exact constant;  // product = constant * mixture where defined
};
RouteComparison compare_hahn_routes(const MVHahnIndex& idx);

/// Bernstein-Bezier reconstruction of the simplex Jacobi polynomial:
///   R_r^alpha(x) = (|alpha|+|r|)_(|r|) / |r|! * sum_{|m|=|r|} qtilde_r(m) B_x(m).
/// Returns the exact reconstructed polynomial (dim d-1).
Poly bb_reconstruct_jacobi(const std::vector<Exact>& alpha, const MultiIndex& r);

/// Hahn -> Jacobi convergence diagnostic: sup over the grid of
/// |q_n(round(N z); N) - R_n(z)| and the constant gap |w_{N,n} - zeta_n|.
struct LimitRow {
  long N = 0;
  int n = 0;
  double sup_error = 0;
  double constant_gap = 0;
};
std::vector<LimitRow> hahn_jacobi_limit(const Exact& alpha, const Exact& beta, int max_n,
                                        const std::vector<long>& Ns,
                                        const std::vector<Exact>& z_grid);

}  // namespace osp

#endif
