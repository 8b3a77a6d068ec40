#include "osp/laguerre.hpp"

#include <algorithm>
#include <stdexcept>

#include "osp/distributions.hpp"
#include "osp/hahn.hpp"
#include "osp/jacobi.hpp"
#include "osp/special.hpp"

namespace osp {

Poly laguerre(const Exact& alpha, int n) {
  if (alpha.sign() <= 0) throw std::invalid_argument("laguerre: alpha must be positive");
  if (n < 0) throw std::invalid_argument("laguerre: negative degree");
  // (alpha)_(n)/n! * sum_j (-n)_(j) / ((alpha)_(j) j!) y^j
  Poly out(1, Basis::monomial);
  Exact lead = rising(alpha, n) / factorial(n);
  Exact coef(1);
  for (int j = 0; j <= n; ++j) {
    if (j > 0) coef *= (Exact(-n) + Exact(j - 1)) / ((alpha + Exact(j - 1)) * Exact(j));
    out.add_term(MultiIndex{j}, lead * coef);
  }
  return out;
}

Exact laguerre_norm(const Exact& alpha, int n) { return rising(alpha, n) / factorial(n); }

void validate(const LaguerreIndex& idx) {
  if (idx.alpha.empty()) throw std::invalid_argument("LaguerreIndex: empty alpha");
  for (const auto& a : idx.alpha)
    if (a.sign() <= 0) throw std::invalid_argument("LaguerreIndex: alpha must be positive");
  if (idx.scale.sign() <= 0) throw std::invalid_argument("LaguerreIndex: scale must be positive");
  if (idx.n.dim() != static_cast<int>(idx.alpha.size()))
    throw std::invalid_argument("LaguerreIndex: index length must equal d");
}

namespace {

Exact alpha_total(const std::vector<Exact>& alpha) {
  Exact s(0);
  for (const auto& a : alpha) s += a;
  return s;
}

MultiIndex nprime_of(const MultiIndex& n) {
  std::vector<int> e;
  for (int i = 0; i + 1 < n.dim(); ++i) e.push_back(n[i]);
  if (e.empty()) e.push_back(0);  // d = 1: empty simplex factor
  return MultiIndex(std::move(e));
}

int nprime_total(const MultiIndex& n) { return n.total() - n[n.dim() - 1]; }

}  // namespace

Poly multiple_laguerre_product(const LaguerreIndex& idx) {
  validate(idx);
  const int d = idx.n.dim();
  Poly out = Poly::constant(d, Exact(1));
  Exact inv_scale = Exact(1) / idx.scale;
  for (int i = 0; i < d; ++i) {
    Poly li = laguerre(idx.alpha[i], idx.n[i]);
    Poly yi = Poly::affine(d, Exact(0), std::vector<Exact>(d, Exact(0)));
    yi.add_term(MultiIndex::zeros(d).with(i, 1), inv_scale);  // y_i / scale
    out = out * compose_affine(li, {yi});
  }
  return out;
}

Poly multiple_laguerre_star(const LaguerreIndex& idx) {
  validate(idx);
  const int d = idx.n.dim();
  const int np_tot = nprime_total(idx.n);
  const Exact atot = alpha_total(idx.alpha);
  Poly total = Poly::affine(d, Exact(0), std::vector<Exact>(d, Exact(1)));  // |y|
  Poly outer = compose_affine(laguerre(atot + Exact(2 * np_tot), idx.n[d - 1]),
                              {(Exact(1) / idx.scale) * total});
  if (d == 1) return outer;
  // |y|^{|n'|} R_{n'}(y/|y|): homogenize the simplex polynomial exactly.
  Poly simplex = mv_jacobi(idx.alpha, nprime_of(idx.n));
  std::vector<Poly> ys;
  for (int i = 0; i + 1 < d; ++i) ys.push_back(Poly::variable(d, i));
  Poly hom = compose_ratio_clear(simplex, np_tot, ys, total);
  return (pow_exact(Exact(1) / idx.scale, np_tot)) * (outer * hom);
}

Exact laguerre_product_norm(const LaguerreIndex& idx) {
  validate(idx);
  Exact r(1);
  for (int i = 0; i < idx.n.dim(); ++i) r *= laguerre_norm(idx.alpha[i], idx.n[i]);
  return r;
}

Exact laguerre_star_norm(const LaguerreIndex& idx) {
  validate(idx);
  const int d = idx.n.dim();
  const int np = nprime_total(idx.n);
  const Exact atot = alpha_total(idx.alpha);
  Exact r = rising(atot, 2 * np) * rising(atot + Exact(2 * np), idx.n[d - 1]) /
            factorial(idx.n[d - 1]);
  if (d > 1) r *= mv_jacobi_norm(idx.alpha, nprime_of(idx.n));
  return r;
}

Exact laguerre_star_norm_printed(const LaguerreIndex& idx) {
  validate(idx);
  const int d = idx.n.dim();
  const int np = nprime_total(idx.n);
  const Exact atot = alpha_total(idx.alpha);
  Exact r = pow_exact(rising(atot, 2 * np), 2) / factorial(idx.n[d - 1]);
  if (d > 1) r *= mv_jacobi_norm(idx.alpha, nprime_of(idx.n));
  return r;
}

std::vector<Exact> erdelyi_coefficients(const Exact& a_tot, const std::vector<Exact>& alpha,
                                        const MultiIndex& n, const std::vector<Exact>& k) {
  if (alpha.size() != static_cast<size_t>(n.dim()) || alpha.size() != k.size())
    throw std::invalid_argument("erdelyi_coefficients: length mismatch");
  Exact scale(1);
  for (int j = 0; j < n.dim(); ++j) scale *= rising(alpha[j], n[j]) / factorial(n[j]);
  std::vector<Exact> phis;
  for (int s = 0; s <= n.total(); ++s) {
    std::vector<Exact> b, c, z;
    for (int j = 0; j < n.dim(); ++j) {
      b.emplace_back(-n[j]);
      c.push_back(alpha[j]);
      z.push_back(k[j]);
    }
    b.emplace_back(-s);
    c.push_back(a_tot);
    z.emplace_back(1);
    phis.push_back(scale * lauricella_fa(a_tot, b, c, z));
  }
  return phis;
}

namespace {

/// d_j coefficients of the expansion L_{n_d}^{|a|+2|n'|}(z) z^{|n'|}
/// = sum_j d_j L_j^{|a|}(z). `printed_shift` reproduces the customary
/// printed form with parameter |a|+2i in place of |a|+2|n'|.
Exact lau_d_coeff(const Exact& atot, int np_tot, int n_d, int j, bool printed_shift) {
  Exact sum(0);
  for (int i = 0; i <= np_tot; ++i) {
    Exact pref = rising(Exact(-np_tot), i) * rising(atot, np_tot) *
                 rising(atot + Exact(2 * np_tot), n_d) / (factorial(i) * factorial(n_d));
    Exact second_param = printed_shift ? atot + Exact(2 * i) : atot + Exact(2 * np_tot);
    Exact fa = lauricella_fa(atot, {Exact(-i), Exact(-n_d), Exact(-j)},
                             {atot, second_param, atot}, {Exact(1), Exact(1), Exact(1)});
    sum += pref * fa;
  }
  return sum;
}

/// The terminating F_A(|a|; -m, -j; alpha, |a|; (x, 1-|x|), 1) expanded as an
/// exact polynomial in the free simplex coordinates.
Poly lauricella_fa_poly(const Exact& atot, const std::vector<Exact>& alpha, const MultiIndex& m,
                        int j) {
  const int d = static_cast<int>(alpha.size());
  Poly out(d - 1, Basis::monomial);
  Poly last = Poly::affine(d - 1, Exact(1), std::vector<Exact>(d - 1, Exact(-1)));
  std::vector<int> caps(m.entries().begin(), m.entries().end());
  // enumerate s <= m componentwise and u <= j
  std::vector<int> s(d, 0);
  while (true) {
    int stot = 0;
    for (int v : s) stot += v;
    Exact s_coef(1);
    bool zero = false;
    for (int l = 0; l < d; ++l) {
      s_coef *= rising(Exact(-m[l]), s[l]) / (rising(alpha[l], s[l]) * factorial(s[l]));
      if (s_coef.is_zero()) zero = true;
    }
    if (!zero) {
      for (int u = 0; u <= j; ++u) {
        Exact c = s_coef * rising(atot, stot + u) * rising(Exact(-j), u) /
                  (rising(atot, u) * factorial(u));
        if (c.is_zero()) continue;
        Poly t = Poly::constant(d - 1, c);
        for (int l = 0; l + 1 < d; ++l) t = t * poly_pow(Poly::variable(d - 1, l), s[l]);
        t = t * poly_pow(last, s[d - 1]);
        out += t;
      }
    }
    // advance the odometer over the box s <= m
    int pos = 0;
    while (pos < d) {
      if (s[pos] < caps[pos]) {
        ++s[pos];
        break;
      }
      s[pos] = 0;
      ++pos;
    }
    if (pos == d) break;
  }
  return out;
}

Exact dm_pmf_of(const std::vector<Exact>& alpha, const MultiIndex& m) {
  std::vector<long> pt(m.entries().begin(), m.entries().end());
  return pmf_exact(DirichletMultinomial{alpha, m.total()}, pt);
}

}  // namespace

std::string cstar_method_name(CStarMethod m) {
  switch (m) {
    case CStarMethod::oracle: return "oracle";
    case CStarMethod::lauricella: return "lauricella";
    case CStarMethod::lauricella_printed: return "lauricella-printed";
    case CStarMethod::lauricella_printed_nprime: return "lauricella-printed-nprime";
    case CStarMethod::hahn: return "hahn";
    case CStarMethod::hahn_printed: return "hahn-printed";
  }
  throw std::logic_error("cstar_method_name: unreachable");
}

Exact connection_cstar(const std::vector<Exact>& alpha, const MultiIndex& n, const MultiIndex& m,
                       CStarMethod method) {
  const int d = static_cast<int>(alpha.size());
  if (n.dim() != d || m.dim() != d)
    throw std::invalid_argument("connection_cstar: indices must have length d");
  if (m.total() != n.total()) return Exact(0);  // orthogonality across degrees
  const Exact atot = alpha_total(alpha);
  const int np_tot = nprime_total(n);
  const int n_d = n[d - 1];
  const int ntot = n.total();
  LaguerreIndex idx{alpha, Exact(1), n};

  switch (method) {
    case CStarMethod::oracle: {
      Poly star = multiple_laguerre_star(idx);
      LaguerreIndex midx{alpha, Exact(1), m};
      Poly prod = multiple_laguerre_product(midx);
      return inner_product(star, prod, WeightSpec{GammaProduct{alpha, Exact(1)}});
    }
    case CStarMethod::lauricella:
    case CStarMethod::lauricella_printed:
    case CStarMethod::lauricella_printed_nprime: {
      const bool corrected = method == CStarMethod::lauricella;
      const int jmax = method == CStarMethod::lauricella_printed_nprime ? np_tot : ntot;
      MomentFunctional w = to_functional(WeightSpec{Dirichlet{alpha}});
      Poly rn = d > 1 ? mv_jacobi(alpha, nprime_of(n)) : Poly::constant(1, Exact(1));
      Exact sum(0);
      for (int j = 0; j <= jmax; ++j) {
        Exact dj = lau_d_coeff(atot, np_tot, n_d, j, /*printed_shift=*/!corrected);
        if (dj.is_zero()) continue;
        Exact weight = corrected ? rising(atot, j) / factorial(j) : Exact(1);
        Poly fa = lauricella_fa_poly(atot, alpha, m, j);
        Exact integral = d > 1 ? integrate(rn * fa, w) : integrate(fa, w);
        sum += dj * weight * integral;
      }
      return rising(atot, ntot) / factorial(ntot) * dm_pmf_of(alpha, m) * sum;
    }
    case CStarMethod::hahn:
    case CStarMethod::hahn_printed: {
      const bool corrected = method == CStarMethod::hahn;
      std::vector<Exact> djs;
      for (int j = 0; j <= ntot; ++j) djs.push_back(lau_d_coeff(atot, np_tot, n_d, j, !corrected));
      // inner weight g(S) = sum_j d_j (-S)_(j) / j!  (corrected), or the
      // constant bracket sum_j d_j / (j! (|a|)_(j)) (printed).
      Exact printed_bracket(0);
      if (!corrected)
        for (int j = 0; j <= ntot; ++j)
          printed_bracket += djs[j] / (factorial(j) * rising(atot, j));
      Exact sum(0);
      std::vector<int> s(d, 0);
      while (true) {
        int stot = 0;
        for (int v : s) stot += v;
        Exact coef(1);
        for (int l = 0; l < d; ++l) coef *= rising(Exact(-m[l]), s[l]) / factorial(s[l]);
        if (!coef.is_zero()) {
          Exact g(0);
          if (corrected) {
            for (int j = 0; j <= ntot; ++j)
              g += djs[j] * rising(Exact(-stot), j) / factorial(j);
          } else {
            g = Exact(1);
          }
          if (!g.is_zero()) {
            std::vector<long> spt(s.begin(), s.end());
            Exact qt = d > 1 ? mv_hahn_tilde_value(alpha, nprime_of(n), spt) : Exact(1);
            sum += coef * g * qt;
          }
        }
        int pos = 0;
        while (pos < d) {
          if (s[pos] < m[pos]) {
            ++s[pos];
            break;
          }
          s[pos] = 0;
          ++pos;
        }
        if (pos == d) break;
      }
      Exact pref = rising(atot, ntot) / factorial(ntot) * dm_pmf_of(alpha, m);
      return corrected ? pref * sum : pref * printed_bracket * sum;
    }
  }
  throw std::logic_error("connection_cstar: unreachable");
}

ConnectionTable connection_table(const std::vector<Exact>& alpha, const MultiIndex& n,
                                 const std::vector<CStarMethod>& methods) {
  ConnectionTable tab;
  tab.alpha = alpha;
  tab.n = n;
  tab.methods = methods;
  tab.ms = indices_with_total(n.dim(), n.total());
  for (const auto& m : tab.ms) {
    std::vector<Exact> row;
    Exact oracle = connection_cstar(alpha, n, m, CStarMethod::oracle);
    for (auto meth : methods) {
      Exact v = meth == CStarMethod::oracle ? oracle : connection_cstar(alpha, n, m, meth);
      row.push_back(v);
      if (meth != CStarMethod::oracle && v != oracle)
        tab.discrepancies.push_back({m, meth, v, oracle});
    }
    tab.values.push_back(std::move(row));
  }
  return tab;
}

Poly gem_laguerre(const Exact& theta, int d, int m_total, const MultiIndex& nprime) {
  if (d < 2) throw std::invalid_argument("gem_laguerre: need d >= 2");
  if (m_total < 0) throw std::invalid_argument("gem_laguerre: negative degree");
  Poly simplex = gem_jacobi(theta, d, nprime, GemVariant::limit);  // dim d-1
  const int np_tot = nprime.total();
  Poly total = Poly::affine(d, Exact(0), std::vector<Exact>(d, Exact(1)));  // |y|
  Poly outer = compose_affine(laguerre(theta + Exact(2 * np_tot), m_total), {total});
  std::vector<Poly> ys;
  for (int i = 0; i + 1 < d; ++i) ys.push_back(Poly::variable(d, i));
  Poly hom = compose_ratio_clear(simplex, np_tot, ys, total);
  return outer * hom;
}

Exact gem_laguerre_norm(const Exact& theta, int d, int m_total, const MultiIndex& nprime) {
  const int np_tot = nprime.total();
  return rising(theta, 2 * np_tot) * rising(theta + Exact(2 * np_tot), m_total) /
         factorial(m_total) * gem_jacobi_norm(theta, d, nprime, GemVariant::limit);
}

MomentFunctional gem_gamma_stick_functional(const Exact& theta, int d) {
  auto sticks = gem_limit_sticks(theta, d);
  return MomentFunctional{
      d, Basis::monomial, "gem-gamma-stick",
      [theta, sticks, d](const MultiIndex& m) {
        std::vector<int> head(m.entries().begin(), m.entries().end() - 1);
        if (head.empty()) head.push_back(0);
        MultiIndex free(std::move(head));
        // |y| ~ Gamma(theta) independent of the stick coordinates.
        return rising(theta, m.total()) *
               stick_monomial_moment(sticks, free.extended(d - 1), m[d - 1]);
      }};
}

}  // namespace osp
