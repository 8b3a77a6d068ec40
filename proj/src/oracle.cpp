#include "osp/oracle.hpp"

#include <stdexcept>

namespace osp {

MomentFunctional to_functional(const WeightSpec& w) {
  validate(w);
  return MomentFunctional{weight_dim(w), natural_basis(w), weight_family_name(w),
                          [w](const MultiIndex& idx) { return moment(w, idx, natural_basis(w)); }};
}

Exact integrate(const Poly& p, const MomentFunctional& w) {
  if (p.dim() != w.dim) throw std::invalid_argument("integrate: dimension mismatch");
  Poly q = p.to_basis(w.basis);
  Exact acc(0);
  for (const auto& [k, c] : q.terms()) acc += c * w.mom(k);
  return acc;
}

Exact inner_product(const Poly& a, const Poly& b, const MomentFunctional& w) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner_product: dimension mismatch");
  Poly am = a.to_basis(Basis::monomial);
  Poly bm = b.to_basis(Basis::monomial);
  return integrate(am * bm, w);
}

Exact inner_product(const Poly& a, const Poly& b, const WeightSpec& w) {
  return inner_product(a, b, to_functional(w));
}

Exact inner_product_brute(const Poly& a, const Poly& b, const WeightSpec& w) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner_product_brute: dimension mismatch");
  if (a.dim() != weight_dim(w))
    throw std::invalid_argument("inner_product_brute: polynomial/weight dimension mismatch");
  Poly am = a.to_basis(Basis::monomial);
  Poly bm = b.to_basis(Basis::monomial);
  Exact acc(0);
  for (const auto& pt : support(w)) {
    // Polynomials live in the free coordinates; the support points carry the
    // full length with the last coordinate redundant.
    std::vector<Exact> x;
    x.reserve(am.dim());
    for (int i = 0; i < am.dim(); ++i) x.emplace_back(pt[i]);
    acc += pmf_exact(w, pt) * am.eval(x) * bm.eval(x);
  }
  return acc;
}

GramReport gram_matrix(const Family& fam, const MomentFunctional& w) {
  GramReport rep;
  rep.family = fam.name;
  rep.weight = w.name;
  rep.indices = fam.indices;
  const int n = static_cast<int>(fam.indices.size());
  std::vector<Poly> polys;
  polys.reserve(n);
  for (const auto& idx : fam.indices) polys.push_back(fam.make(idx).to_basis(Basis::monomial));
  rep.matrix.assign(n, std::vector<Exact>(n, Exact(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Exact v = integrate(polys[i] * polys[j], w);
      rep.matrix[i][j] = v;
      rep.matrix[j][i] = v;
      if (i != j && !v.is_zero())
        rep.offdiag_nonzero.push_back({fam.indices[i], fam.indices[j], v});
    }
  }
  if (fam.printed_norm) {
    rep.compared_printed = true;
    for (int i = 0; i < n; ++i) {
      Exact printed = fam.printed_norm(fam.indices[i]);
      if (printed != rep.matrix[i][i])
        rep.diag_mismatches.push_back({fam.indices[i], rep.matrix[i][i], printed});
    }
  }
  return rep;
}

FourierExpansion fourier_expand(const Poly& f, const Family& fam, const MomentFunctional& w) {
  FourierExpansion out{fam.indices, {}, {}, Poly::zero(f.dim())};
  Poly fm = f.to_basis(Basis::monomial);
  Poly recon(f.dim(), Basis::monomial);
  for (const auto& idx : fam.indices) {
    Poly g = fam.make(idx).to_basis(Basis::monomial);
    Exact a = integrate(fm * g, w);
    Exact norm = integrate(g * g, w);
    if (norm.is_zero()) throw std::domain_error("fourier_expand: degenerate family member");
    out.coefficients.push_back(a);
    out.norms.push_back(norm);
    recon += (a / norm) * g;
  }
  out.residual = fm - recon;
  return out;
}

}  // namespace osp
