#include "osp/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "osp/hahn.hpp"
#include "osp/laguerre.hpp"
#include "osp/meixner.hpp"
#include "osp/special.hpp"

namespace osp {

FamilyWithWeight jacobi_family(const std::vector<Exact>& alpha, int max_degree) {
  const int k = static_cast<int>(alpha.size()) - 1;
  Family fam{"jacobi", indices_up_to_total(k, max_degree),
             [alpha](const MultiIndex& n) { return mv_jacobi(alpha, n); },
             [alpha](const MultiIndex& n) { return mv_jacobi_norm(alpha, n); }};
  return {std::move(fam), to_functional(WeightSpec{Dirichlet{alpha}})};
}

FamilyWithWeight hahn_family(const std::vector<Exact>& alpha, long total, int max_degree) {
  const int k = static_cast<int>(alpha.size()) - 1;
  const int cap = std::min<long>(max_degree, total);
  Family fam{"hahn", indices_up_to_total(k, cap),
             [alpha, total](const MultiIndex& n) {
               return mv_hahn_mixture(MVHahnIndex{alpha, n, total});
             },
             [alpha, total](const MultiIndex& n) {
               return mv_hahn_norm(MVHahnIndex{alpha, n, total});
             }};
  return {std::move(fam), to_functional(WeightSpec{DirichletMultinomial{alpha, total}})};
}

FamilyWithWeight laguerre_product_family(const std::vector<Exact>& alpha, int max_degree) {
  const int d = static_cast<int>(alpha.size());
  Family fam{"laguerre-product", indices_up_to_total(d, max_degree),
             [alpha](const MultiIndex& n) {
               return multiple_laguerre_product(LaguerreIndex{alpha, Exact(1), n});
             },
             [alpha](const MultiIndex& n) {
               return laguerre_product_norm(LaguerreIndex{alpha, Exact(1), n});
             }};
  return {std::move(fam), to_functional(WeightSpec{GammaProduct{alpha, Exact(1)}})};
}

FamilyWithWeight laguerre_star_family(const std::vector<Exact>& alpha, int max_degree,
                                      bool printed_constants) {
  const int d = static_cast<int>(alpha.size());
  Family fam{"laguerre-star", indices_up_to_total(d, max_degree),
             [alpha](const MultiIndex& n) {
               return multiple_laguerre_star(LaguerreIndex{alpha, Exact(1), n});
             },
             printed_constants
                 ? std::function<Exact(const MultiIndex&)>(
                       [alpha](const MultiIndex& n) {
                         return laguerre_star_norm_printed(LaguerreIndex{alpha, Exact(1), n});
                       })
                 : std::function<Exact(const MultiIndex&)>([alpha](const MultiIndex& n) {
                     return laguerre_star_norm(LaguerreIndex{alpha, Exact(1), n});
                   })};
  return {std::move(fam), to_functional(WeightSpec{GammaProduct{alpha, Exact(1)}})};
}

FamilyWithWeight meixner_product_family(const std::vector<Exact>& alpha, const Exact& p,
                                        int max_degree) {
  const int d = static_cast<int>(alpha.size());
  Family fam{"meixner-product", indices_up_to_total(d, max_degree),
             [alpha, p](const MultiIndex& n) {
               return mv_meixner_product(MeixnerIndex{alpha, p, n});
             },
             [alpha, p](const MultiIndex& n) {
               Exact r(1);
               for (int i = 0; i < n.dim(); ++i) r *= meixner_tilde_norm(alpha[i], p, n[i]);
               return r;
             }};
  return {std::move(fam), to_functional(WeightSpec{NegBinProduct{alpha, p}})};
}

FamilyWithWeight meixner_star_family(const std::vector<Exact>& alpha, const Exact& p,
                                     int max_degree) {
  const int d = static_cast<int>(alpha.size());
  Family fam{"meixner-star", indices_up_to_total(d, max_degree),
             [alpha, p](const MultiIndex& n) { return mv_meixner_star(MeixnerIndex{alpha, p, n}); },
             nullptr};
  return {std::move(fam), to_functional(WeightSpec{NegBinProduct{alpha, p}})};
}

FamilyWithWeight gem_jacobi_family(const Exact& theta, int d, int max_degree, GemVariant v) {
  Family fam{v == GemVariant::limit ? "gem-jacobi" : "gem-jacobi-symmetric",
             indices_up_to_total(d - 1, max_degree),
             [theta, d, v](const MultiIndex& n) { return gem_jacobi(theta, d, n, v); },
             [theta, d, v](const MultiIndex& n) { return gem_jacobi_norm(theta, d, n, v); }};
  MomentFunctional w =
      v == GemVariant::limit
          ? to_functional(WeightSpec{GemTruncated{theta, d}})
          : MomentFunctional{d - 1, Basis::monomial, "size-biased-symmetric-dirichlet",
                             [theta, d](const MultiIndex& m) {
                               return stick_monomial_moment(size_biased_symmetric_sticks(theta, d),
                                                            m);
                             }};
  return {std::move(fam), std::move(w)};
}

FamilyWithWeight gem_laguerre_family(const Exact& theta, int d, int max_degree) {
  Family fam{"gem-laguerre", indices_up_to_total(d, max_degree),
             [theta, d](const MultiIndex& n) {
               std::vector<int> np(n.entries().begin(), n.entries().end() - 1);
               return gem_laguerre(theta, d, n[n.dim() - 1], MultiIndex(std::move(np)));
             },
             [theta, d](const MultiIndex& n) {
               std::vector<int> np(n.entries().begin(), n.entries().end() - 1);
               return gem_laguerre_norm(theta, d, n[n.dim() - 1], MultiIndex(std::move(np)));
             }};
  return {std::move(fam), gem_gamma_stick_functional(theta, d)};
}

GramReport hypergeometric_hahn_gram(const std::vector<long>& eps, long total, int max_degree) {
  const int d = static_cast<int>(eps.size());
  std::vector<Exact> neg;
  for (long e : eps) neg.emplace_back(-e);
  WeightSpec h = Hypergeometric{eps, total};
  auto pts = support(h);

  std::vector<MultiIndex> indices;
  for (const auto& n : indices_up_to_total(d - 1, std::min<long>(max_degree, total))) {
    bool ok = true;
    for (int i = 0; i < d - 1; ++i)
      if (n[i] > eps[i]) ok = false;
    if (ok) indices.push_back(n);
  }

  GramReport rep;
  rep.family = "hahn-hypergeometric";
  rep.weight = weight_family_name(h);
  rep.indices = indices;
  const int sz = static_cast<int>(indices.size());

  // Tabulate the factorized-route values over the support.
  std::vector<std::vector<Exact>> values(sz);
  for (int i = 0; i < sz; ++i)
    for (const auto& pt : pts)
      values[i].push_back(mv_hahn_product_eval(MVHahnIndex{neg, indices[i], total}, pt));

  rep.matrix.assign(sz, std::vector<Exact>(sz, Exact(0)));
  for (int i = 0; i < sz; ++i)
    for (int j = i; j < sz; ++j) {
      Exact acc(0);
      for (size_t t = 0; t < pts.size(); ++t)
        acc += pmf_exact(h, pts[t]) * values[i][t] * values[j][t];
      rep.matrix[i][j] = acc;
      rep.matrix[j][i] = acc;
      if (i != j && !acc.is_zero())
        rep.offdiag_nonzero.push_back({indices[i], indices[j], acc});
    }
  return rep;
}

}  // namespace osp
