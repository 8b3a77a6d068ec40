#include "osp/hahn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "osp/distributions.hpp"
#include "osp/jacobi.hpp"
#include "osp/special.hpp"

namespace osp {

Poly hahn_h(const HahnParams& p, int n) {
  if (n < 0 || n > p.N) throw std::invalid_argument("hahn_h: need 0 <= n <= N");
  // 3F2(-n, n+theta-1, -r; alpha, -N; 1); the coefficient of r_[j] is
  // (-1)^j (-n)_(j) (n+theta-1)_(j) / ((alpha)_(j) (-N)_(j) j!).
  Poly out(1, Basis::falling);
  Exact coef(1);
  for (int j = 0; j <= n; ++j) {
    if (j > 0) {
      Exact den = (p.alpha + Exact(j - 1)) * (Exact(-p.N) + Exact(j - 1)) * Exact(j);
      if (den.is_zero()) throw std::domain_error("hahn_h: denominator Pochhammer vanishes");
      coef *= (Exact(-n) + Exact(j - 1)) * (Exact(n) + p.theta() - Exact(2) + Exact(j)) * Exact(-1);
      coef /= den;
    }
    out.add_term(MultiIndex{j}, coef);
  }
  return out;
}

Exact hahn_value_at_N(const HahnParams& p, int n) {
  Exact den = rising(p.alpha, n);
  if (den.is_zero()) throw std::domain_error("hahn_value_at_N: (alpha)_(n) vanishes");
  Exact v = rising(p.beta, n) / den;
  return n % 2 == 0 ? v : -v;
}

Poly hahn_q(const HahnParams& p, int n) {
  Exact v = hahn_value_at_N(p, n);
  if (v.is_zero()) throw std::domain_error("hahn_q: h_n(N;N) vanishes");
  return (Exact(1) / v) * hahn_h(p, n);
}

Exact hahn_h_norm(const HahnParams& p, int n) {
  if (n == 0) return Exact(1);
  return factorial(n) / falling(Exact(p.N), n) * rising(p.theta() + Exact(p.N), n) /
         (rising(p.theta(), n - 1) * (p.theta() + Exact(2 * n - 1))) * rising(p.beta, n) /
         rising(p.alpha, n);
}

Exact hahn_q_norm(const HahnParams& p, int n) {
  if (n == 0) return Exact(1);
  return factorial(n) / falling(Exact(p.N), n) * rising(p.theta() + Exact(p.N), n) /
         (rising(p.theta(), n - 1) * (p.theta() + Exact(2 * n - 1))) * rising(p.alpha, n) /
         rising(p.beta, n);
}

Poly hahn_tilde(const Exact& alpha, const Exact& beta, long N, int n) {
  // Replace x^k in R_n^{alpha,beta} by the Beta(alpha+r, beta+N-r) moment
  // (alpha+r)_(k) / (theta+N)_(k); a polynomial in r with constant
  // denominators.
  Poly rn = jacobi_r_unchecked(alpha, beta, n);
  const Exact theta_plus_n = alpha + beta + Exact(N);
  Poly out(1, Basis::monomial);
  Poly base = Poly::affine(1, alpha, {Exact(1)});  // alpha + r
  for (const auto& [k, c] : rn.terms()) {
    Exact den = rising(theta_plus_n, k[0]);
    if (den.is_zero()) throw std::domain_error("hahn_tilde: (theta+N)_(k) vanishes");
    out += (c / den) * rising_factorial_poly(base, k[0]);
  }
  return out;
}

Exact hahn_tilde_value(const Exact& alpha, const Exact& beta, const Exact& N, int n,
                       const Exact& r) {
  Poly rn = jacobi_r_unchecked(alpha, beta, n);
  const Exact theta_plus_n = alpha + beta + N;
  Exact acc(0);
  for (const auto& [k, c] : rn.terms()) {
    Exact den = rising(theta_plus_n, k[0]);
    if (den.is_zero()) throw std::domain_error("hahn_tilde_value: (theta+N)_(k) vanishes");
    acc += c * rising(alpha + r, k[0]) / den;
  }
  return acc;
}

Exact hahn_tilde_norm(const HahnParams& p, int n) {
  return falling(Exact(p.N), n) / rising(p.theta() + Exact(p.N), n) *
         jacobi_r_norm(JacobiParams{p.alpha, p.beta}, n);
}

void validate(const MVHahnIndex& idx) {
  if (idx.alpha.size() < 2) throw std::invalid_argument("MVHahnIndex: need d >= 2");
  if (idx.n.dim() != static_cast<int>(idx.alpha.size()) - 1)
    throw std::invalid_argument("MVHahnIndex: index length must be d-1");
  if (idx.total < 0 || idx.n.total() > idx.total)
    throw std::invalid_argument("MVHahnIndex: requires |n| <= total");
}

Poly mv_hahn_mixture(const MVHahnIndex& idx) {
  validate(idx);
  const int k = idx.n.dim();
  Poly rn = mv_jacobi(idx.alpha, idx.n);
  Exact alpha_tot(0);
  for (const auto& a : idx.alpha) alpha_tot += a;
  Poly out(k, Basis::monomial);
  for (const auto& [m, c] : rn.terms()) {
    Exact den = rising(alpha_tot + Exact(idx.total), m.total());
    Poly t = Poly::constant(k, c / den);
    for (int i = 0; i < k; ++i) {
      if (m[i] == 0) continue;
      Poly base = Poly::affine(k, idx.alpha[i], std::vector<Exact>(k, Exact(0)));
      base.add_term(MultiIndex::zeros(k).with(i, 1), Exact(1));  // alpha_i + r_i
      t = t * rising_factorial_poly(base, m[i]);
    }
    out += t;
  }
  return out;
}

Exact mv_hahn_product_eval(const MVHahnIndex& idx, const std::vector<long>& r) {
  validate(idx);
  const int d = static_cast<int>(idx.alpha.size());
  if (static_cast<int>(r.size()) != d)
    throw std::invalid_argument("mv_hahn_product_eval: full-length lattice point expected");
  long rtot = 0;
  for (long ri : r) rtot += ri;
  if (rtot != idx.total) throw std::domain_error("mv_hahn_product_eval: point outside support");

  auto alpha_tail = [&](int j) {  // A_j = sum_{i=j+1..d} alpha_i (1-based j)
    Exact s(0);
    for (int i = j; i < d; ++i) s += idx.alpha[i];
    return s;
  };
  auto r_tail = [&](int j) {  // R_j = sum_{i=j+1..d} r_i
    long s = 0;
    for (int i = j; i < d; ++i) s += r[i];
    return s;
  };
  auto n_at = [&](int j) { return j <= d - 1 ? idx.n[j - 1] : 0; };      // n_j, n_d = 0
  auto n_tail = [&](int j) {  // N_j = sum_{i=j+1..d-1} n_i
    int s = 0;
    for (int i = j + 1; i <= d - 1; ++i) s += n_at(i);
    return s;
  };

  // Bracket prefactor: prod_{j=1}^{d-1} (A_j + R_j + N_{j+1})_(n_{j+1})
  // over (|alpha| + |r|)_(N_1).
  Exact bracket(1);
  for (int j = 1; j <= d - 1; ++j)
    bracket *= rising(alpha_tail(j) + Exact(r_tail(j)) + Exact(n_tail(j + 1)), n_at(j + 1));
  bracket /= rising(alpha_tail(0) + Exact(idx.total), n_tail(1));

  // Univariate posterior-mixture factors q~_{n_j}^{(alpha_j, A_j+2N_j)}(r_j; R_{j-1}-N_j).
  Exact val = bracket;
  for (int j = 1; j <= d; ++j) {
    if (n_at(j) == 0) continue;
    val *= hahn_tilde_value(idx.alpha[j - 1], alpha_tail(j) + Exact(2 * n_tail(j)),
                            Exact(r_tail(j - 1) - n_tail(j)), n_at(j), Exact(r[j - 1]));
  }
  return val;
}

Poly mv_hahn(const MVHahnIndex& idx, HahnRoute route) {
  Poly mix = mv_hahn_mixture(idx);
  if (route == HahnRoute::mixture) return mix;
  RouteComparison cmp = compare_hahn_routes(idx);
  if (!cmp.proportional)
    throw std::domain_error("mv_hahn: factorized route is not proportional to the mixture");
  return cmp.constant * mix;
}

Exact mv_hahn_norm(const MVHahnIndex& idx) {
  validate(idx);
  Exact alpha_tot(0);
  for (const auto& a : idx.alpha) alpha_tot += a;
  return falling(Exact(idx.total), idx.n.total()) /
         rising(alpha_tot + Exact(idx.total), idx.n.total()) * mv_jacobi_norm(idx.alpha, idx.n);
}

Exact mv_hahn_tilde_value(const std::vector<Exact>& alpha, const MultiIndex& nprime,
                          const std::vector<long>& r) {
  const int d = static_cast<int>(alpha.size());
  if (static_cast<int>(r.size()) != d)
    throw std::invalid_argument("mv_hahn_tilde_value: full-length count vector expected");
  Poly rn = mv_jacobi(alpha, nprime);
  Exact alpha_tot(0);
  for (const auto& a : alpha) alpha_tot += a;
  long rtot = 0;
  for (long ri : r) rtot += ri;
  Exact acc(0);
  for (const auto& [m, c] : rn.terms()) {
    Exact t = c / rising(alpha_tot + Exact(rtot), m.total());
    for (int i = 0; i < d - 1; ++i) t *= rising(alpha[i] + Exact(r[i]), m[i]);
    acc += t;
  }
  return acc;
}

RouteComparison compare_hahn_routes(const MVHahnIndex& idx) {
  validate(idx);
  Poly mix = mv_hahn_mixture(idx);
  WeightSpec dm = DirichletMultinomial{idx.alpha, idx.total};
  RouteComparison cmp;
  bool have_const = false;
  for (const auto& pt : support(dm)) {
    std::vector<Exact> x;
    for (int i = 0; i + 1 < static_cast<int>(pt.size()); ++i) x.emplace_back(pt[i]);
    Exact mv = mix.eval(x);
    Exact pv = mv_hahn_product_eval(idx, pt);
    if (mv.is_zero()) {
      if (!pv.is_zero()) return cmp;  // not proportional
      continue;
    }
    Exact ratio = pv / mv;
    if (!have_const) {
      cmp.constant = ratio;
      have_const = true;
    } else if (ratio != cmp.constant) {
      return cmp;
    }
  }
  cmp.proportional = have_const && !cmp.constant.is_zero();
  return cmp;
}

Poly bb_reconstruct_jacobi(const std::vector<Exact>& alpha, const MultiIndex& r) {
  const int d = static_cast<int>(alpha.size());
  if (r.dim() != d - 1) throw std::invalid_argument("bb_reconstruct_jacobi: index length must be d-1");
  const int total = r.total();
  MVHahnIndex idx{alpha, r, total};
  Poly qt = mv_hahn_mixture(idx);
  Exact alpha_tot(0);
  for (const auto& a : alpha) alpha_tot += a;

  // 1 - |x| as the last simplex coordinate.
  Poly last = Poly::affine(d - 1, Exact(1), std::vector<Exact>(d - 1, Exact(-1)));
  Poly sum(d - 1, Basis::monomial);
  for (const auto& m : indices_with_total(d, total)) {
    std::vector<Exact> mfree;
    for (int i = 0; i < d - 1; ++i) mfree.emplace_back(m[i]);
    Exact qval = qt.eval(mfree);
    if (qval.is_zero()) continue;
    Poly bern = Poly::constant(d - 1, multinomial(m));
    for (int i = 0; i < d - 1; ++i)
      bern = bern * poly_pow(Poly::variable(d - 1, i), m[i]);
    bern = bern * poly_pow(last, m[d - 1]);
    sum += qval * bern;
  }
  return (rising(alpha_tot + Exact(total), total) / factorial(total)) * sum;
}

std::vector<LimitRow> hahn_jacobi_limit(const Exact& alpha, const Exact& beta, int max_n,
                                        const std::vector<long>& Ns,
                                        const std::vector<Exact>& z_grid) {
  std::vector<LimitRow> rows;
  for (long N : Ns) {
    for (int n = 0; n <= max_n; ++n) {
      HahnParams hp{alpha, beta, N};
      Poly q = hahn_q(hp, n);
      Poly rj = jacobi_r(JacobiParams{alpha, beta}, n);
      double sup = 0;
      for (const auto& z : z_grid) {
        // nearest integer to N z
        Exact nz = Exact(N) * z;
        long rounded = std::lround(nz.to_double());
        double qa = q.eval({Exact(rounded)}).to_double();
        double rv = rj.eval({z}).to_double();
        sup = std::max(sup, std::abs(qa - rv));
      }
      double w = 1.0 / hahn_q_norm(hp, n).to_double();
      double zeta = 1.0 / jacobi_r_norm(JacobiParams{alpha, beta}, n).to_double();
      rows.push_back({N, n, sup, std::abs(w - zeta)});
    }
  }
  return rows;
}

}  // namespace osp
