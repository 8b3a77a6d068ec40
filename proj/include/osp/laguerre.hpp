#ifndef OSP_LAGUERRE_HPP
#define OSP_LAGUERRE_HPP

#include <string>
#include <vector>

#include "osp/exact.hpp"
#include "osp/multi_index.hpp"
#include "osp/oracle.hpp"
#include "osp/poly.hpp"

namespace osp {

/// Laguerre polynomial with Gamma-shape parameter alpha > 0:
/// (alpha)_(n)/n! * 1F1(-n; alpha; y); orthogonal under Gamma(alpha, 1).
Poly laguerre(const Exact& alpha, int n);
/// E[L_n^2] = (alpha)_(n)/n!.
Exact laguerre_norm(const Exact& alpha, int n);

/// Index for the d-variate systems over GammaProduct(alpha, scale);
/// nprime = (n_1..n_{d-1}) drives the simplex factor of the star system.
struct LaguerreIndex {
  std::vector<Exact> alpha;  // d entries
  Exact scale{1};
  MultiIndex n;  // length d
};

void validate(const LaguerreIndex& idx);

/// Product system: prod_i L_{n_i}^{alpha_i}(y_i / scale).
Poly multiple_laguerre_product(const LaguerreIndex& idx);
/// Star system: L_{n_d}^{|alpha|+2|n'|}(|y|/scale) (|y|/scale)^{|n'|}
/// R_{n'}^alpha(y/|y|), the denominators cleared exactly.
Poly multiple_laguerre_star(const LaguerreIndex& idx);

/// E[(product)^2] = prod (alpha_i)_(n_i)/n_i! (scale-free).
Exact laguerre_product_norm(const LaguerreIndex& idx);
/// E[(star)^2] = (|alpha|)_(2|n'|) (|alpha|+2|n'|)_(n_d) / n_d! * E[R_{n'}^2].
Exact laguerre_star_norm(const LaguerreIndex& idx);
/// The customary printed value, which squares the first Pochhammer; deviates
/// from the oracle whenever (|alpha|+2|n'|)_(n_d) != (|alpha|)_(2|n'|).
Exact laguerre_star_norm_printed(const LaguerreIndex& idx);

/// Coefficients phi_s, s = 0..|n|, of the expansion
///   prod_j L_{n_j}^{alpha_j}(k_j z) = sum_s phi_s L_s^{a_tot}(z)
/// as an identity in z.
std::vector<Exact> erdelyi_coefficients(const Exact& a_tot, const std::vector<Exact>& alpha,
                                        const MultiIndex& n, const std::vector<Exact>& k);

/// Connection coefficients c*_m(n) between the star and product systems,
/// nonzero only for |m| = |n| (scale fixed to 1).
///  - oracle:      E[star_n * product_m] under GammaProduct(alpha, 1);
///    ground truth.
///  - lauricella:  the Lauricella-mixture representation with the Laguerre
///    self-norm weight (|alpha|)_(j)/j! restored in the j-sum; matches the
///    oracle.
///  - lauricella_printed / lauricella_printed_nprime: the representation
///    exactly as customarily printed (no j-weight, shifted 2i parameter),
///    with the j-sum over 0..|n| resp. 0..|n'|; kept for comparison.
///  - hahn:        the discrete-kernel representation with the s-dependent
///    inner weight; matches the oracle.
///  - hahn_printed: the printed form with a constant bracket; comparison
///    only.
enum class CStarMethod {
  oracle,
  lauricella,
  lauricella_printed,
  lauricella_printed_nprime,
  hahn,
  hahn_printed,
};

std::string cstar_method_name(CStarMethod m);

Exact connection_cstar(const std::vector<Exact>& alpha, const MultiIndex& n, const MultiIndex& m,
                       CStarMethod method);

/// Full table over { |m| = |n| } with per-method columns and a discrepancy
/// list relative to the oracle.
struct ConnectionTable {
  std::vector<Exact> alpha;
  MultiIndex n;
  std::vector<MultiIndex> ms;
  std::vector<CStarMethod> methods;
  std::vector<std::vector<Exact>> values;  // [m][method]

  struct Discrepancy {
    MultiIndex m;
    CStarMethod method;
    Exact value;
    Exact oracle;
  };
  std::vector<Discrepancy> discrepancies;
};

ConnectionTable connection_table(const std::vector<Exact>& alpha, const MultiIndex& n,
                                 const std::vector<CStarMethod>& methods);

/// Truncated stick-breaking Laguerre system (d coordinates, the last one the
/// lumped remainder): L_{m_total}^{theta+2|n'|}(|y|) |y|^{|n'|} Rgem_{n'}(y/|y|).
Poly gem_laguerre(const Exact& theta, int d, int m_total, const MultiIndex& nprime);

/// Moment functional of the matching weight: |y| ~ Gamma(theta, 1)
/// independent of y/|y| which follows the truncated stick measure.
MomentFunctional gem_gamma_stick_functional(const Exact& theta, int d);

/// E[(gem star)^2] = (theta)_(2|n'|) (theta+2|n'|)_(m) / m! * E[Rgem_{n'}^2].
Exact gem_laguerre_norm(const Exact& theta, int d, int m_total, const MultiIndex& nprime);

}  // namespace osp

#endif
