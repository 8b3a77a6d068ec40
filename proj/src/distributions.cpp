#include "osp/distributions.hpp"

#include <mpfr.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "osp/special.hpp"

namespace osp {

namespace {

Exact sum(const std::vector<Exact>& v) {
  Exact s(0);
  for (const auto& x : v) s += x;
  return s;
}

void require_positive(const std::vector<Exact>& alpha, const char* who) {
  if (alpha.empty()) throw std::invalid_argument(std::string(who) + ": empty parameter vector");
  for (const auto& a : alpha)
    if (a.sign() <= 0) throw std::invalid_argument(std::string(who) + ": parameters must be positive");
}

}  // namespace

void validate(const WeightSpec& w) {
  std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Dirichlet>) {
          require_positive(v.alpha, "Dirichlet");
          if (v.alpha.size() < 2) throw std::invalid_argument("Dirichlet: needs d >= 2 points");
        } else if constexpr (std::is_same_v<T, DirichletMultinomial>) {
          require_positive(v.alpha, "DirichletMultinomial");
          if (v.alpha.size() < 2) throw std::invalid_argument("DirichletMultinomial: needs d >= 2");
          if (v.total < 0) throw std::invalid_argument("DirichletMultinomial: negative total");
        } else if constexpr (std::is_same_v<T, GammaProduct>) {
          require_positive(v.alpha, "GammaProduct");
          if (v.scale.sign() <= 0) throw std::invalid_argument("GammaProduct: scale must be positive");
        } else if constexpr (std::is_same_v<T, NegBinProduct>) {
          require_positive(v.alpha, "NegBinProduct");
          if (v.p.sign() <= 0 || v.p >= Exact(1))
            throw std::invalid_argument("NegBinProduct: p must lie strictly inside (0,1)");
        } else if constexpr (std::is_same_v<T, Hypergeometric>) {
          if (v.eps.empty()) throw std::invalid_argument("Hypergeometric: empty parameter vector");
          long e = 0;
          for (long ei : v.eps) {
            if (ei <= 0) throw std::invalid_argument("Hypergeometric: eps entries must be positive");
            e += ei;
          }
          if (v.total < 0 || v.total > e)
            throw std::invalid_argument("Hypergeometric: total outside [0, |eps|]");
        } else if constexpr (std::is_same_v<T, GemTruncated>) {
          if (v.theta.sign() <= 0) throw std::invalid_argument("GemTruncated: theta must be positive");
          if (v.d < 2) throw std::invalid_argument("GemTruncated: needs d >= 2");
        }
      },
      w);
}

int weight_dim(const WeightSpec& w) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Dirichlet>) return static_cast<int>(v.alpha.size()) - 1;
        else if constexpr (std::is_same_v<T, DirichletMultinomial>)
          return static_cast<int>(v.alpha.size()) - 1;
        else if constexpr (std::is_same_v<T, GammaProduct>) return static_cast<int>(v.alpha.size());
        else if constexpr (std::is_same_v<T, NegBinProduct>) return static_cast<int>(v.alpha.size());
        else if constexpr (std::is_same_v<T, Hypergeometric>) return static_cast<int>(v.eps.size()) - 1;
        else return v.d - 1;
      },
      w);
}

Basis natural_basis(const WeightSpec& w) {
  return std::visit(
      [](const auto& v) -> Basis {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Dirichlet> || std::is_same_v<T, GammaProduct> ||
                      std::is_same_v<T, GemTruncated>)
          return Basis::monomial;
        else
          return Basis::falling;
      },
      w);
}

std::string weight_family_name(const WeightSpec& w) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Dirichlet>) return "dirichlet";
        else if constexpr (std::is_same_v<T, DirichletMultinomial>) return "dirichlet-multinomial";
        else if constexpr (std::is_same_v<T, GammaProduct>) return "gamma-product";
        else if constexpr (std::is_same_v<T, NegBinProduct>) return "negbin-product";
        else if constexpr (std::is_same_v<T, Hypergeometric>) return "hypergeometric";
        else return "gem-truncated";
      },
      w);
}

Exact dirichlet_monomial_moment(const std::vector<Exact>& alpha, const MultiIndex& m) {
  // E[prod x_i^{m_i}] = prod (alpha_i)_(m_i) / (|alpha|)_(|m|), m over free coords.
  Exact num(1);
  for (int i = 0; i < m.dim(); ++i) num *= rising(alpha[i], m[i]);
  return num / rising(sum(alpha), m.total());
}

Exact dm_falling_moment(const std::vector<Exact>& alpha, long total, const MultiIndex& l) {
  // E[prod (R_i)_[l_i]] = total_[|l|] * prod (alpha_i)_(l_i) / (|alpha|)_(|l|).
  Exact num = falling(Exact(total), l.total());
  for (int i = 0; i < l.dim(); ++i) num *= rising(alpha[i], l[i]);
  return num / rising(sum(alpha), l.total());
}

Exact stick_monomial_moment(const std::vector<BetaStick>& sticks, const MultiIndex& m,
                            int lump_power) {
  if (m.dim() != static_cast<int>(sticks.size()))
    throw std::invalid_argument("stick_monomial_moment: one exponent per stick");
  if (lump_power < 0) throw std::invalid_argument("stick_monomial_moment: negative lump power");
  // x_j = B_j prod_{i<j}(1-B_i)  =>  E = prod_j E[B_j^{m_j} (1-B_j)^{T_j}]
  // with T_j the exponent mass strictly after stick j (plus the lump power),
  // and E[B^a (1-B)^b] = (p)_(a) (q)_(b) / (p+q)_(a+b) for B ~ Beta(p, q).
  Exact r(1);
  for (size_t j = 0; j < sticks.size(); ++j) {
    long a = m[static_cast<int>(j)];
    long b = m.tail_after(static_cast<int>(j)) + lump_power;
    r *= rising(sticks[j].a, a) * rising(sticks[j].b, b) / rising(sticks[j].a + sticks[j].b, a + b);
  }
  return r;
}

Exact moment(const WeightSpec& w, const MultiIndex& index, Basis basis) {
  validate(w);
  if (index.dim() != weight_dim(w))
    throw std::invalid_argument("moment: index dimension does not match the weight");
  if (basis != natural_basis(w))
    throw std::invalid_argument("moment: " + weight_family_name(w) + " expects the " +
                                basis_name(natural_basis(w)) + " basis");
  return std::visit(
      [&](const auto& v) -> Exact {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Dirichlet>) {
          return dirichlet_monomial_moment(v.alpha, index);
        } else if constexpr (std::is_same_v<T, DirichletMultinomial>) {
          return dm_falling_moment(v.alpha, v.total, index);
        } else if constexpr (std::is_same_v<T, GammaProduct>) {
          Exact r = pow_exact(v.scale, index.total());
          for (int i = 0; i < index.dim(); ++i) r *= rising(v.alpha[i], index[i]);
          return r;
        } else if constexpr (std::is_same_v<T, NegBinProduct>) {
          Exact q = v.p / (Exact(1) - v.p);
          Exact r = pow_exact(q, index.total());
          for (int i = 0; i < index.dim(); ++i) r *= rising(v.alpha[i], index[i]);
          return r;
        } else if constexpr (std::is_same_v<T, Hypergeometric>) {
          // Formal Dirichlet-multinomial moment with alpha = -eps; validated
          // against direct support summation in the test suite.
          std::vector<Exact> neg;
          neg.reserve(v.eps.size());
          for (long e : v.eps) neg.emplace_back(-e);
          return dm_falling_moment(neg, v.total, index);
        } else {
          std::vector<BetaStick> sticks(v.d - 1, BetaStick{Exact(1), v.theta});
          return stick_monomial_moment(sticks, index);
        }
      },
      w);
}

std::vector<std::vector<long>> support(const WeightSpec& w) {
  validate(w);
  return std::visit(
      [](const auto& v) -> std::vector<std::vector<long>> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, DirichletMultinomial>) {
          std::vector<std::vector<long>> out;
          for (const auto& idx : indices_with_total(static_cast<int>(v.alpha.size()),
                                                    static_cast<int>(v.total))) {
            std::vector<long> pt(idx.entries().begin(), idx.entries().end());
            out.push_back(std::move(pt));
          }
          return out;
        } else if constexpr (std::is_same_v<T, Hypergeometric>) {
          std::vector<std::vector<long>> out;
          for (const auto& idx :
               indices_with_total(static_cast<int>(v.eps.size()), static_cast<int>(v.total))) {
            bool ok = true;
            for (int i = 0; i < idx.dim(); ++i)
              if (idx[i] > v.eps[i]) ok = false;
            if (!ok) continue;
            std::vector<long> pt(idx.entries().begin(), idx.entries().end());
            out.push_back(std::move(pt));
          }
          return out;
        } else {
          throw std::domain_error("support: only lattice weights with finite support");
        }
      },
      w);
}

Exact multinomial_pmf(const std::vector<Exact>& x, const MultiIndex& n) {
  if (x.size() != static_cast<size_t>(n.dim()))
    throw std::invalid_argument("multinomial_pmf: length mismatch");
  if (sum(x) != Exact(1)) throw std::invalid_argument("multinomial_pmf: probabilities must sum to 1");
  Exact r = multinomial(n);
  for (int i = 0; i < n.dim(); ++i) r *= pow_exact(x[i], n[i]);
  return r;
}

Exact pmf_exact(const WeightSpec& w, const std::vector<long>& r) {
  validate(w);
  return std::visit(
      [&](const auto& v) -> Exact {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, DirichletMultinomial>) {
          if (r.size() != v.alpha.size()) throw std::invalid_argument("pmf_exact: length mismatch");
          long tot = std::accumulate(r.begin(), r.end(), 0L);
          if (tot != v.total) throw std::domain_error("pmf_exact: point outside support");
          std::vector<int> ri(r.begin(), r.end());
          MultiIndex idx{std::vector<int>(ri)};
          Exact val = multinomial(idx);
          for (size_t i = 0; i < r.size(); ++i) val *= rising(v.alpha[i], r[i]);
          return val / rising(sum(v.alpha), v.total);
        } else if constexpr (std::is_same_v<T, Hypergeometric>) {
          if (r.size() != v.eps.size()) throw std::invalid_argument("pmf_exact: length mismatch");
          long tot = std::accumulate(r.begin(), r.end(), 0L);
          if (tot != v.total) throw std::domain_error("pmf_exact: point outside support");
          Exact val(1);
          for (size_t i = 0; i < r.size(); ++i) {
            if (r[i] > v.eps[i]) throw std::domain_error("pmf_exact: point outside support");
            val *= integer_binom(v.eps[i], r[i]);
          }
          long etot = std::accumulate(v.eps.begin(), v.eps.end(), 0L);
          return val / integer_binom(etot, v.total);
        } else if constexpr (std::is_same_v<T, NegBinProduct>) {
          if (r.size() != v.alpha.size()) throw std::invalid_argument("pmf_exact: length mismatch");
          Exact val(1);
          for (size_t i = 0; i < r.size(); ++i) {
            if (r[i] < 0) throw std::domain_error("pmf_exact: point outside support");
            if (!v.alpha[i].is_integer())
              throw std::domain_error(
                  "pmf_exact: NegBin mass with non-integer alpha carries an irrational factor "
                  "(1-p)^alpha; use pmf_or_density_str");
            val *= rising(v.alpha[i], r[i]) / factorial(r[i]) * pow_exact(v.p, r[i]) *
                   pow_exact(Exact(1) - v.p, v.alpha[i].to_long());
          }
          return val;
        } else {
          throw std::domain_error("pmf_exact: not a lattice weight");
        }
      },
      w);
}

namespace {

/// Beta(a, b) as an exact rational, requiring a or b to be a positive integer.
Exact beta_exact(const Exact& a, const Exact& b) {
  if (a.is_integer() && a.sign() > 0) return factorial(a.to_long() - 1) / rising(b, a.to_long());
  if (b.is_integer() && b.sign() > 0) return factorial(b.to_long() - 1) / rising(a, b.to_long());
  throw std::domain_error("density_exact: Gamma ratio does not reduce over integer shifts");
}

}  // namespace

Exact density_exact(const WeightSpec& w, const std::vector<Exact>& x) {
  validate(w);
  const auto* dir = std::get_if<Dirichlet>(&w);
  if (!dir) throw std::domain_error("density_exact: implemented for Dirichlet only");
  const int d = static_cast<int>(dir->alpha.size());
  if (static_cast<int>(x.size()) != d - 1)
    throw std::invalid_argument("density_exact: expected the d-1 free coordinates");
  Exact last = Exact(1);
  for (const auto& xi : x) last -= xi;
  if (last.sign() <= 0) throw std::domain_error("density_exact: point outside the open simplex");
  // 1/B(alpha) via the stick factorization B(alpha) = prod_j B(alpha_j, A_j).
  Exact norm(1);
  for (int j = 0; j + 1 < d; ++j) {
    Exact tail(0);
    for (int i = j + 1; i < d; ++i) tail += dir->alpha[i];
    norm *= beta_exact(dir->alpha[j], tail);
  }
  Exact dens = Exact(1) / norm;
  for (int i = 0; i < d - 1; ++i) {
    if (x[i].sign() <= 0) throw std::domain_error("density_exact: point outside the open simplex");
    // x^(alpha-1) is rational only for integer alpha.
    if (!dir->alpha[i].is_integer())
      throw std::domain_error("density_exact: non-integer exponent; use pmf_or_density_str");
    dens *= pow_exact(x[i], dir->alpha[i].to_long() - 1);
  }
  if (!dir->alpha[d - 1].is_integer())
    throw std::domain_error("density_exact: non-integer exponent; use pmf_or_density_str");
  dens *= pow_exact(last, dir->alpha[d - 1].to_long() - 1);
  return dens;
}

namespace {

constexpr mpfr_prec_t kPrec = 256;  // ~77 decimal digits of working precision

class Mpf {
 public:
  Mpf() { mpfr_init2(x_, kPrec); mpfr_set_zero(x_, 1); }
  explicit Mpf(const Exact& q) {
    mpfr_init2(x_, kPrec);
    mpfr_set_q(x_, q.raw().get_mpq_t(), MPFR_RNDN);
  }
  Mpf(const Mpf& o) { mpfr_init2(x_, kPrec); mpfr_set(x_, o.x_, MPFR_RNDN); }
  Mpf& operator=(const Mpf& o) { mpfr_set(x_, o.x_, MPFR_RNDN); return *this; }
  ~Mpf() { mpfr_clear(x_); }
  mpfr_ptr get() { return x_; }
  mpfr_srcptr get() const { return x_; }

 private:
  mpfr_t x_;
};

Mpf lngamma(const Exact& a) {
  Mpf v(a), r;
  mpfr_lngamma(r.get(), v.get(), MPFR_RNDN);
  return r;
}

void acc_add(Mpf& acc, const Mpf& v) { mpfr_add(acc.get(), acc.get(), v.get(), MPFR_RNDN); }
void acc_sub(Mpf& acc, const Mpf& v) { mpfr_sub(acc.get(), acc.get(), v.get(), MPFR_RNDN); }

/// a * ln(b) for rational a, b > 0.
Mpf mul_ln(const Exact& a, const Exact& b) {
  Mpf vb(b), r;
  mpfr_log(r.get(), vb.get(), MPFR_RNDN);
  Mpf va(a);
  mpfr_mul(r.get(), r.get(), va.get(), MPFR_RNDN);
  return r;
}

std::string exp_to_string(const Mpf& log_value, int sig_digits) {
  Mpf v = log_value;
  mpfr_exp(v.get(), v.get(), MPFR_RNDN);
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", sig_digits, v.get());
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

}  // namespace

std::string pmf_or_density_str(const WeightSpec& w, const std::vector<Exact>& point,
                               int sig_digits) {
  validate(w);
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Dirichlet>) {
          const int d = static_cast<int>(v.alpha.size());
          if (static_cast<int>(point.size()) != d - 1)
            throw std::invalid_argument("pmf_or_density_str: expected d-1 coordinates");
          Exact last(1);
          for (const auto& xi : point) last -= xi;
          if (last.sign() <= 0) throw std::domain_error("point outside the open simplex");
          Mpf lg = lngamma(sum(v.alpha));
          for (const auto& a : v.alpha) acc_sub(lg, lngamma(a));
          for (int i = 0; i < d - 1; ++i) {
            if (point[i].sign() <= 0) throw std::domain_error("point outside the open simplex");
            acc_add(lg, mul_ln(v.alpha[i] - Exact(1), point[i]));
          }
          acc_add(lg, mul_ln(v.alpha[d - 1] - Exact(1), last));
          return exp_to_string(lg, sig_digits);
        } else if constexpr (std::is_same_v<T, GammaProduct>) {
          if (point.size() != v.alpha.size())
            throw std::invalid_argument("pmf_or_density_str: length mismatch");
          Mpf lg;
          Exact tot(0);
          for (size_t i = 0; i < point.size(); ++i) {
            if (point[i].sign() <= 0) throw std::domain_error("point outside the support");
            acc_sub(lg, lngamma(v.alpha[i]));
            acc_add(lg, mul_ln(v.alpha[i] - Exact(1), point[i]));
            acc_sub(lg, mul_ln(v.alpha[i], v.scale));
            tot += point[i];
          }
          Mpf t{tot / v.scale};
          acc_sub(lg, t);
          return exp_to_string(lg, sig_digits);
        } else if constexpr (std::is_same_v<T, NegBinProduct>) {
          Mpf lg;
          for (size_t i = 0; i < point.size(); ++i) {
            if (!point[i].is_nonneg_integer()) throw std::domain_error("lattice point expected");
            long k = point[i].to_long();
            acc_add(lg, lngamma(v.alpha[i] + Exact(k)));
            acc_sub(lg, lngamma(v.alpha[i]));
            acc_sub(lg, lngamma(Exact(k + 1)));
            acc_add(lg, mul_ln(Exact(k), v.p));
            acc_add(lg, mul_ln(v.alpha[i], Exact(1) - v.p));
          }
          return exp_to_string(lg, sig_digits);
        } else if constexpr (std::is_same_v<T, DirichletMultinomial> ||
                             std::is_same_v<T, Hypergeometric>) {
          std::vector<long> r;
          for (const auto& c : point) {
            if (!c.is_nonneg_integer()) throw std::domain_error("lattice point expected");
            r.push_back(c.to_long());
          }
          Mpf lg{pmf_exact(w, r)};
          mpfr_log(lg.get(), lg.get(), MPFR_RNDN);
          return exp_to_string(lg, sig_digits);
        } else {
          throw std::domain_error("pmf_or_density_str: no density for the stick measure");
        }
      },
      w);
}

Exact poisson_series_term(const Exact& lambda, long k) {
  return pow_exact(lambda, k) / factorial(k);
}

double poisson_pmf_double(double lambda, long k) {
  double lg = -lambda + k * std::log(lambda) - std::lgamma(static_cast<double>(k) + 1.0);
  return std::exp(lg);
}

}  // namespace osp
