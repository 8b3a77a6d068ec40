#ifndef OSP_DISTRIBUTIONS_HPP
#define OSP_DISTRIBUTIONS_HPP

#include <string>
#include <variant>
#include <vector>

#include "osp/exact.hpp"
#include "osp/multi_index.hpp"
#include "osp/poly.hpp"

namespace osp {

/// Weight measures. Polynomials over a d-point simplex (continuous or
/// lattice) live in the d-1 free coordinates; the last coordinate is always
/// eliminated as 1-|x| (resp. total-|r|). Product measures on R_+^d / N^d
/// keep all d coordinates free.

struct Dirichlet {
  std::vector<Exact> alpha;  // d positive entries; polynomials have dim d-1
};

struct DirichletMultinomial {
  std::vector<Exact> alpha;
  long total = 0;  // |r|, the multinomial draw size
};

struct GammaProduct {
  std::vector<Exact> alpha;
  Exact scale{1};  // common scale |beta|
};

struct NegBinProduct {
  std::vector<Exact> alpha;
  Exact p;  // strictly inside (0,1)
};

/// Multivariate hypergeometric with positive integer parameters eps and a
/// fixed draw size; support { n : n_i <= eps_i, |n| = total }.
struct Hypergeometric {
  std::vector<long> eps;
  long total = 0;
};

/// Stick-breaking measure with d-1 iid Beta(1, theta) sticks: the law of the
/// first d-1 size-biased atoms, the remainder lumped into coordinate d.
/// Monomial moments in the free coordinates are truncation-independent.
struct GemTruncated {
  Exact theta;
  int d = 2;
};

using WeightSpec = std::variant<Dirichlet, DirichletMultinomial, GammaProduct, NegBinProduct,
                                Hypergeometric, GemTruncated>;

/// Throws std::invalid_argument on parameter violations.
void validate(const WeightSpec& w);
/// Dimension of the polynomials the weight integrates.
int weight_dim(const WeightSpec& w);
/// Basis in which closed-form moments exist (monomial for continuous,
/// falling-factorial for lattice weights).
Basis natural_basis(const WeightSpec& w);
std::string weight_family_name(const WeightSpec& w);

/// Exact expectation of the basis element with exponent vector `index`
/// (dimension weight_dim(w), basis natural_basis(w)).
Exact moment(const WeightSpec& w, const MultiIndex& index, Basis basis);

/// Finite support as full-length lattice points (DirichletMultinomial and
/// Hypergeometric only).
std::vector<std::vector<long>> support(const WeightSpec& w);

/// Exact pmf at a full-length lattice point. Supported: DirichletMultinomial,
/// Hypergeometric, NegBinProduct with integer alpha (otherwise the mass has an
/// irrational factor (1-p)^alpha and this throws).
Exact pmf_exact(const WeightSpec& w, const std::vector<long>& r);

/// Exact Dirichlet density at a rational interior point (free coordinates).
/// Requires a Gamma-reducible normalizing constant (each stick Beta(a_j, A_j)
/// with a_j or A_j a positive integer); throws std::domain_error otherwise.
Exact density_exact(const WeightSpec& w, const std::vector<Exact>& x);

/// Decimal value of the pmf/density at a point, computed with 256-bit
/// floating point and printed to sig_digits significant digits. Works for
/// all parameter values, including non-reducible Gamma ratios.
std::string pmf_or_density_str(const WeightSpec& w, const std::vector<Exact>& point,
                               int sig_digits = 50);

/// Multinomial mass B_x(n) = (|n| choose n) x^n for a full probability
/// vector x (must sum to 1).
Exact multinomial_pmf(const std::vector<Exact>& x, const MultiIndex& n);

/// lambda^k / k!, the Poisson mass without its e^{-lambda} factor.
Exact poisson_series_term(const Exact& lambda, long k);
double poisson_pmf_double(double lambda, long k);

/// Independent Beta sticks B_j ~ Beta(a_j, b_j) with x_j = B_j prod_{i<j}(1-B_i).
struct BetaStick {
  Exact a, b;
};

/// E[ prod_j x_j^{m_j} * lump^{lump_power} ] where lump = prod_j (1-B_j);
/// m has one entry per stick.
Exact stick_monomial_moment(const std::vector<BetaStick>& sticks, const MultiIndex& m,
                            int lump_power = 0);

/// Closed-form moment kernels, exposed for reuse by the family constructors.
Exact dirichlet_monomial_moment(const std::vector<Exact>& alpha, const MultiIndex& m);
Exact dm_falling_moment(const std::vector<Exact>& alpha, long total, const MultiIndex& l);

}  // namespace osp

#endif
