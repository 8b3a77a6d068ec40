#include "osp/meixner.hpp"

#include <cmath>
#include <stdexcept>

#include "osp/distributions.hpp"
#include "osp/hahn.hpp"
#include "osp/laguerre.hpp"
#include "osp/oracle.hpp"
#include "osp/special.hpp"

namespace osp {

namespace {
void check_meixner_params(const Exact& alpha, const Exact& p) {
  if (alpha.sign() <= 0) throw std::invalid_argument("meixner: alpha must be positive");
  if (p.sign() <= 0 || p >= Exact(1))
    throw std::invalid_argument("meixner: p must lie strictly inside (0,1)");
}
}  // namespace

Poly meixner(const Exact& alpha, const Exact& p, int n) {
  check_meixner_params(alpha, p);
  if (n < 0) throw std::invalid_argument("meixner: negative degree");
  // coefficient of k_[j]: (-n)_(j) / ((alpha)_(j) j!) * ((1-p)/p)^j
  Poly out(1, Basis::falling);
  Exact q = (Exact(1) - p) / p;
  Exact coef(1);
  for (int j = 0; j <= n; ++j) {
    if (j > 0) coef *= (Exact(-n) + Exact(j - 1)) * q / ((alpha + Exact(j - 1)) * Exact(j));
    out.add_term(MultiIndex{j}, coef);
  }
  return out;
}

Exact meixner_norm(const Exact& alpha, const Exact& p, int n) {
  check_meixner_params(alpha, p);
  return factorial(n) / (rising(alpha, n) * pow_exact(p, n));
}

Poly meixner_tilde(const Exact& alpha, const Exact& p, int n) {
  check_meixner_params(alpha, p);
  // Expand L_n^alpha at lambda (1-p)/p and replace lambda^j by the
  // Gamma(alpha+k, p) moment (alpha+k)_(j) p^j.
  Poly ln = laguerre(alpha, n);
  Poly out(1, Basis::monomial);
  Poly base = Poly::affine(1, alpha, {Exact(1)});  // alpha + k
  for (const auto& [j, c] : ln.terms())
    out += (c * pow_exact(Exact(1) - p, j[0])) * rising_factorial_poly(base, j[0]);
  return out;
}

Exact meixner_tilde_norm(const Exact& alpha, const Exact& p, int n) {
  check_meixner_params(alpha, p);
  return rising(alpha, n) * pow_exact(p, n) / factorial(n);
}

void validate(const MeixnerIndex& idx) {
  if (idx.alpha.empty()) throw std::invalid_argument("MeixnerIndex: empty alpha");
  for (const auto& a : idx.alpha)
    if (a.sign() <= 0) throw std::invalid_argument("MeixnerIndex: alpha must be positive");
  if (idx.p.sign() <= 0 || idx.p >= Exact(1))
    throw std::invalid_argument("MeixnerIndex: p must lie strictly inside (0,1)");
  if (idx.n.dim() != static_cast<int>(idx.alpha.size()))
    throw std::invalid_argument("MeixnerIndex: index length must equal d");
}

Poly mv_meixner_product(const MeixnerIndex& idx) {
  validate(idx);
  const int d = idx.n.dim();
  Poly out = Poly::constant(d, Exact(1));
  for (int i = 0; i < d; ++i) {
    Poly mi = meixner_tilde(idx.alpha[i], idx.p, idx.n[i]);
    Poly ri = Poly::variable(d, i);
    out = out * compose_affine(mi, {ri});
  }
  return out;
}

namespace {

/// Gamma-posterior mixture of a dim-d polynomial in lambda: substitute
/// lambda^m -> prod_i (alpha_i + r_i)_(m_i) p^{|m|} after the argument
/// scaling lambda -> lambda (1-p)/p, yielding a polynomial in r.
Poly gamma_posterior_mixture(const Poly& lpoly, const std::vector<Exact>& alpha, const Exact& p) {
  const int d = lpoly.dim();
  Poly out(d, Basis::monomial);
  for (const auto& [m, c] : lpoly.terms()) {
    Poly t = Poly::constant(d, c * pow_exact(Exact(1) - p, m.total()));
    for (int i = 0; i < d; ++i) {
      if (m[i] == 0) continue;
      Poly base = Poly::affine(d, alpha[i], std::vector<Exact>(d, Exact(0)));
      base.add_term(MultiIndex::zeros(d).with(i, 1), Exact(1));  // alpha_i + r_i
      t = t * rising_factorial_poly(base, m[i]);
    }
    out += t;
  }
  return out;
}

}  // namespace

Poly mv_meixner_star(const MeixnerIndex& idx) {
  validate(idx);
  Poly star = multiple_laguerre_star(LaguerreIndex{idx.alpha, Exact(1), idx.n});
  return gamma_posterior_mixture(star, idx.alpha, idx.p);
}

Exact meixner_mixture_eval(const MeixnerIndex& idx, const std::vector<long>& r, bool star) {
  validate(idx);
  const int d = idx.n.dim();
  if (static_cast<int>(r.size()) != d)
    throw std::invalid_argument("meixner_mixture_eval: point length mismatch");
  LaguerreIndex li{idx.alpha, Exact(1), idx.n};
  Poly lpoly = star ? multiple_laguerre_star(li) : multiple_laguerre_product(li);
  Exact acc(0);
  for (const auto& [m, c] : lpoly.terms()) {
    Exact t = c * pow_exact(Exact(1) - idx.p, m.total());
    for (int i = 0; i < d; ++i) t *= rising(idx.alpha[i] + Exact(r[i]), m[i]);
    acc += t;
  }
  return acc;
}

Exact mv_meixner_star_factorized_eval(const MeixnerIndex& idx, const std::vector<long>& r) {
  validate(idx);
  const int d = idx.n.dim();
  if (static_cast<int>(r.size()) != d)
    throw std::invalid_argument("mv_meixner_star_factorized_eval: point length mismatch");
  std::vector<int> np;
  for (int i = 0; i + 1 < d; ++i) np.push_back(idx.n[i]);
  if (np.empty()) np.push_back(0);
  MultiIndex nprime{std::vector<int>(np)};
  const int np_tot = nprime.total();
  Exact atot(0);
  for (const auto& a : idx.alpha) atot += a;
  long rtot = 0;
  for (long ri : r) rtot += ri;

  Poly mt = meixner_tilde(atot + Exact(2 * np_tot), idx.p, idx.n[d - 1]);
  Exact mt_val = mt.eval({Exact(rtot - np_tot)});
  Exact qt = d > 1 ? mv_hahn_tilde_value(idx.alpha, nprime, r) : Exact(1);
  return pow_exact(Exact(1) - idx.p, np_tot) * mt_val * rising(atot + Exact(rtot), np_tot) * qt;
}

Exact meixner_connection_inner(const MeixnerIndex& idx, const MultiIndex& m) {
  validate(idx);
  if (m.dim() != idx.n.dim())
    throw std::invalid_argument("meixner_connection_inner: index length mismatch");
  if (m.total() != idx.n.total()) return Exact(0);
  Poly star = mv_meixner_star(idx);
  Poly prod = mv_meixner_product(MeixnerIndex{idx.alpha, idx.p, m});
  return inner_product(star, prod, WeightSpec{NegBinProduct{idx.alpha, idx.p}});
}

namespace {

/// Exact upper bound for e^x with rational x >= 0 (uses e < 3).
Exact exp_upper(const Exact& x) {
  long c = (x.sign() <= 0) ? 0 : (x.to_double() >= 0 ? static_cast<long>(std::ceil(x.to_double())) : 0);
  return pow_exact(Exact(3), c);
}

/// sum_{m>=0} (1+m)^D lambda^m / m!  <=  e^lambda * E[(1+Po(lambda))^D],
/// evaluated exactly via Stirling moments and the e^lambda bound.
Exact full_series_bound(const Exact& lambda, int D) {
  Exact mom(0);
  for (int t = 0; t <= D; ++t) {
    // E[Po^t] = sum_k S2(t,k) lambda^k
    Exact pt(0);
    for (int k = 0; k <= t; ++k) pt += stirling2(t, k) * pow_exact(lambda, k);
    mom += integer_binom(D, t) * pt;
  }
  return exp_upper(lambda) * mom;
}

/// sum_{m>T} (1+m)^D lambda^m / m!, bounded by a geometric tail once the
/// term ratio drops below 1/2.
Exact tail_series_bound(const Exact& lambda, int D, long T) {
  // ratio(m->m+1) <= 2^D * lambda / (m+2) <= 1/2 for m >= T when
  // T + 2 >= 2^{D+1} * lambda.
  Exact ratio_cap = pow_exact(Exact(2), D) * lambda / Exact(T + 2);
  if (ratio_cap >= Exact(1, 2)) return Exact(-1);  // caller must grow T
  Exact first = pow_exact(Exact(T + 2), D) * pow_exact(lambda, T + 1) / factorial(T + 1);
  return Exact(2) * first;
}

}  // namespace

PoissonKernelResult poisson_kernel_check(const MeixnerIndex& idx, const std::vector<Exact>& lambda,
                                         long budget, const Exact& tolerance, bool star) {
  validate(idx);
  const int d = idx.n.dim();
  if (static_cast<int>(lambda.size()) != d)
    throw std::invalid_argument("poisson_kernel_check: lambda length mismatch");
  for (const auto& l : lambda)
    if (l.sign() <= 0) throw std::invalid_argument("poisson_kernel_check: lambda must be positive");
  if (tolerance.sign() <= 0) throw std::invalid_argument("poisson_kernel_check: bad tolerance");

  Poly mr = star ? mv_meixner_star(idx) : mv_meixner_product(idx);
  const int D = std::max(mr.total_degree(), 0);
  Exact coef_sum(0);
  for (const auto& [k, c] : mr.terms()) coef_sum += abs(c);

  // Find a box edge T whose proven tail bound is below tolerance/2.
  long T = 4;
  Exact bound(-1);
  while (T <= budget) {
    Exact total(0);
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) {
      Exact t = tail_series_bound(lambda[i], D, T);
      if (t.sign() < 0) {
        ok = false;
        break;
      }
      Exact others(1);
      for (int j = 0; j < d; ++j)
        if (j != i) others *= full_series_bound(lambda[j], D);
      total += t * others;
    }
    if (ok) {
      bound = coef_sum * total;  // e^{-|lambda|} <= 1 absorbed
      if (bound < tolerance / Exact(2)) break;
    }
    T *= 2;
  }
  if (T > budget || bound.sign() < 0 || bound >= tolerance / Exact(2))
    throw std::runtime_error("poisson_kernel_check: tolerance not reached within budget");

  // Exact partial sum of M_r(m) prod lambda^m / m! over the box.
  Exact partial(0);
  std::vector<long> m(d, 0);
  while (true) {
    std::vector<Exact> pt;
    Exact w(1);
    for (int i = 0; i < d; ++i) {
      pt.emplace_back(m[i]);
      w *= poisson_series_term(lambda[i], m[i]);
    }
    partial += mr.eval(pt) * w;
    int pos = 0;
    while (pos < d) {
      if (m[pos] < T) {
        ++m[pos];
        break;
      }
      m[pos] = 0;
      ++pos;
    }
    if (pos == d) break;
  }

  double lam_tot = 0;
  for (const auto& l : lambda) lam_tot += l.to_double();
  const double e_neg = std::exp(-lam_tot);

  // Right-hand side: expectation-normalized Laguerre value.
  LaguerreIndex li{idx.alpha, Exact(1), idx.n};
  Poly lr = star ? multiple_laguerre_star(li) : multiple_laguerre_product(li);
  std::vector<Exact> z;
  Exact q = (Exact(1) - idx.p) / idx.p;
  for (const auto& l : lambda) z.push_back(l * q);
  Exact l_val = lr.eval(z);
  Exact m_norm = inner_product(mr, mr, WeightSpec{NegBinProduct{idx.alpha, idx.p}});
  Exact l_norm = star ? laguerre_star_norm(li) : laguerre_product_norm(li);

  PoissonKernelResult res;
  res.lhs = partial.to_double() * e_neg;
  res.rhs = (m_norm / l_norm * l_val).to_double();
  res.rhs_unnormalized = (m_norm * l_val).to_double();
  res.tail_bound = bound.to_double();
  res.box = T;
  return res;
}

}  // namespace osp
