#ifndef OSP_FAMILIES_HPP
#define OSP_FAMILIES_HPP

#include <vector>

#include "osp/exact.hpp"
#include "osp/jacobi.hpp"
#include "osp/oracle.hpp"

namespace osp {

/// Ready-made Family/weight pairs for the Gram and expansion machinery.
/// Index conventions: simplex families use length d-1 indices; product
/// families on R_+^d / N^d use length d; the stick Laguerre family encodes
/// (n', m) as a length-d index with m in the last slot.

struct FamilyWithWeight {
  Family family;
  MomentFunctional weight;
};

FamilyWithWeight jacobi_family(const std::vector<Exact>& alpha, int max_degree);
FamilyWithWeight hahn_family(const std::vector<Exact>& alpha, long total, int max_degree);
FamilyWithWeight laguerre_product_family(const std::vector<Exact>& alpha, int max_degree);
/// `printed_constants` selects the customary printed star norm (which is
/// known to deviate) instead of the oracle-consistent closed form.
FamilyWithWeight laguerre_star_family(const std::vector<Exact>& alpha, int max_degree,
                                      bool printed_constants = false);
FamilyWithWeight meixner_product_family(const std::vector<Exact>& alpha, const Exact& p,
                                        int max_degree);
FamilyWithWeight meixner_star_family(const std::vector<Exact>& alpha, const Exact& p,
                                     int max_degree);
FamilyWithWeight gem_jacobi_family(const Exact& theta, int d, int max_degree, GemVariant v);
FamilyWithWeight gem_laguerre_family(const Exact& theta, int d, int max_degree);

/// Gram report for the hypergeometric-weight Hahn system (negative-parameter
/// factorized route), computed by direct finite-support summation; indices
/// restricted to { n : n_i <= eps_i, |n| <= min(max_degree, total) }.
GramReport hypergeometric_hahn_gram(const std::vector<long>& eps, long total, int max_degree);

}  // namespace osp

#endif
