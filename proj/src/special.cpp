#include "osp/special.hpp"

#include <map>
#include <stdexcept>

namespace osp {

Exact rising(const Exact& a, long n) {
  Exact r(1);
  if (n >= 0) {
    for (long i = 0; i < n; ++i) r *= a + Exact(i);
    return r;
  }
  for (long i = 1; i <= -n; ++i) {
    Exact f = a - Exact(i);
    if (f.is_zero()) throw std::domain_error("rising: vanishing factor at negative order");
    r /= f;
  }
  return r;
}

Exact falling(const Exact& a, long n) {
  if (n < 0) throw std::invalid_argument("falling: negative order");
  Exact r(1);
  for (long i = 0; i < n; ++i) r *= a - Exact(i);
  return r;
}

Exact factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  return rising(Exact(1), n);
}

Exact integer_binom(long n, long k) {
  if (k < 0 || k > n) return Exact(0);
  return falling(Exact(n), k) / factorial(k);
}

Exact multinomial(const MultiIndex& n) {
  Exact r = factorial(n.total());
  for (int i = 0; i < n.dim(); ++i) r /= factorial(n[i]);
  return r;
}

Exact pow_exact(const Exact& x, long k) {
  if (k < 0) throw std::invalid_argument("pow_exact: negative exponent");
  Exact r(1);
  for (long i = 0; i < k; ++i) r *= x;
  return r;
}

Exact pow_exact_signed(const Exact& x, long k) {
  if (k >= 0) return pow_exact(x, k);
  if (x.is_zero()) throw std::domain_error("pow_exact_signed: 0 to a negative power");
  return Exact(1) / pow_exact(x, -k);
}

Exact stirling2(int n, int k) {
  if (k < 0 || k > n) return Exact(0);
  if (n == 0) return Exact(1);  // k == 0 == n
  if (k == 0) return Exact(0);
  static std::map<std::pair<int, int>, Exact> cache;
  auto it = cache.find({n, k});
  if (it != cache.end()) return it->second;
  Exact v = Exact(k) * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
  cache.emplace(std::make_pair(n, k), v);
  return v;
}

Exact stirling1_signed(int n, int k) {
  if (k < 0 || k > n) return Exact(0);
  if (n == 0) return Exact(1);
  if (k == 0) return Exact(0);
  static std::map<std::pair<int, int>, Exact> cache;
  auto it = cache.find({n, k});
  if (it != cache.end()) return it->second;
  // x_[n] = x_[n-1] * (x - (n-1))
  Exact v = stirling1_signed(n - 1, k - 1) - Exact(n - 1) * stirling1_signed(n - 1, k);
  cache.emplace(std::make_pair(n, k), v);
  return v;
}

namespace {
/// Smallest k >= 0 such that some parameter equals -k, or -1 if none.
long termination_witness(const std::vector<Exact>& params) {
  long best = -1;
  for (const auto& a : params) {
    if (!a.is_integer() || a.sign() > 0) continue;
    long k = (-a).to_long();
    if (best < 0 || k < best) best = k;
  }
  return best;
}
}  // namespace

Exact hyp_pfq(const PfqSeries& s) {
  long k = termination_witness(s.num);
  if (k < 0)
    throw std::domain_error("hyp_pfq: no terminating (non-positive integer) numerator parameter");
  Exact sum(0);
  Exact term(1);  // j = 0
  for (long j = 0; j <= k; ++j) {
    sum += term;
    if (j == k) break;
    for (const auto& a : s.num) term *= a + Exact(j);
    for (const auto& c : s.den) {
      Exact f = c + Exact(j);
      if (f.is_zero())
        throw std::domain_error("hyp_pfq: denominator Pochhammer vanishes before termination");
      term /= f;
    }
    term *= s.z;
    term /= Exact(j + 1);
  }
  return sum;
}

namespace {
void fa_recurse(const Exact& a, const std::vector<Exact>& b, const std::vector<Exact>& c,
                const std::vector<Exact>& z, size_t i, long total, Exact factor, Exact& sum) {
  if (i == b.size()) {
    sum += rising(a, total) * factor;
    return;
  }
  long cap = (-b[i]).to_long();
  Exact f(1);
  for (long m = 0; m <= cap; ++m) {
    if (m > 0) {
      Exact den = c[i] + Exact(m - 1);
      if (den.is_zero())
        throw std::domain_error("lauricella_fa: denominator Pochhammer vanishes in range");
      f *= (b[i] + Exact(m - 1)) * z[i] / (den * Exact(m));
    }
    fa_recurse(a, b, c, z, i + 1, total + m, factor * f, sum);
  }
}
}  // namespace

Exact lauricella_fa(const Exact& a, const std::vector<Exact>& b, const std::vector<Exact>& c,
                    const std::vector<Exact>& z) {
  if (b.size() != c.size() || b.size() != z.size())
    throw std::invalid_argument("lauricella_fa: parameter length mismatch");
  for (const auto& bi : b)
    if (!bi.is_integer() || bi.sign() > 0)
      throw std::domain_error("lauricella_fa: every b_i must be a non-positive integer");
  Exact sum(0);
  fa_recurse(a, b, c, z, 0, 0, Exact(1), sum);
  return sum;
}

}  // namespace osp
