#ifndef OSP_MEIXNER_HPP
#define OSP_MEIXNER_HPP

#include <vector>

#include "osp/exact.hpp"
#include "osp/multi_index.hpp"
#include "osp/poly.hpp"

namespace osp {

/// Meixner polynomial 2F1(-n, -k; alpha; (p-1)/p), orthogonal under the
/// negative binomial NB(alpha, p); falling-factorial basis in k.
Poly meixner(const Exact& alpha, const Exact& p, int n);
/// E[M_n^2] = n! / ((alpha)_(n) p^n).
Exact meixner_norm(const Exact& alpha, const Exact& p, int n);

/// Gamma-posterior mixture form: E_{Gamma(alpha+k, p)}[ L_n^alpha(lambda (1-p)/p) ],
/// a degree-n polynomial in k (monomial basis). Proportional to meixner():
/// tilde = (alpha)_(n) p^n / n! * M_n.
Poly meixner_tilde(const Exact& alpha, const Exact& p, int n);
/// E[Mtilde_n^2] = (alpha)_(n) p^n / n!.
Exact meixner_tilde_norm(const Exact& alpha, const Exact& p, int n);

struct MeixnerIndex {
  std::vector<Exact> alpha;  // d entries
  Exact p;
  MultiIndex n;  // length d
};

void validate(const MeixnerIndex& idx);

/// Product system: prod_i Mtilde_{n_i}^{alpha_i, p}(r_i), dim d.
Poly mv_meixner_product(const MeixnerIndex& idx);
/// Star system, defined by the Gamma-posterior mixture of the star Laguerre
/// polynomial; an exact polynomial in r_1..r_d.
Poly mv_meixner_star(const MeixnerIndex& idx);

/// Mixture value at a lattice point, computed by direct moment substitution
/// (an independent path from the symbolic polynomials above).
Exact meixner_mixture_eval(const MeixnerIndex& idx, const std::vector<long>& r, bool star);

/// The factorized star representation evaluated at a lattice point:
/// (1-p)^{|n'|} Mtilde_{n_d}^{|alpha|+2|n'|, p}(|r|-|n'|) (|alpha|+|r|)_(|n'|)
/// qtilde_{n'}^alpha(r; |r|).
Exact mv_meixner_star_factorized_eval(const MeixnerIndex& idx, const std::vector<long>& r);

/// E[ star_n * product_m ] under NB^d(alpha, p); exact. Equals
/// p^{|n|} c*_m(n) where c* is the Laguerre connection coefficient (the
/// customary unscaled claim holds only at p = 1).
Exact meixner_connection_inner(const MeixnerIndex& idx, const MultiIndex& m);

/// Poisson-kernel summation check:
///   sum_m M_r(m) Po_lambda^d(m)  vs  E[M_r^2]/E[L_r^2] * L_r(lambda (1-p)/p),
/// truncated with a proven tail bound below `tolerance`. rhs_unnormalized
/// omits the 1/E[L_r^2] factor (the customary reading).
struct PoissonKernelResult {
  double lhs = 0;
  double rhs = 0;
  double rhs_unnormalized = 0;
  double tail_bound = 0;
  long box = 0;  // summation box edge actually used
};
PoissonKernelResult poisson_kernel_check(const MeixnerIndex& idx, const std::vector<Exact>& lambda,
                                         long budget, const Exact& tolerance, bool star);

}  // namespace osp

#endif
