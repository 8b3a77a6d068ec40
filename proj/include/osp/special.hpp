#ifndef OSP_SPECIAL_HPP
#define OSP_SPECIAL_HPP

#include <vector>

#include "osp/exact.hpp"
#include "osp/multi_index.hpp"

namespace osp {

/// Rising factorial a_(n) = a(a+1)...(a+n-1). Negative n is the formal
/// extension Gamma(a+n)/Gamma(a) = 1/((a-1)(a-2)...(a+n)); it throws if a
/// factor vanishes.
Exact rising(const Exact& a, long n);

/// Falling factorial a_[n] = a(a-1)...(a-n+1), n >= 0.
Exact falling(const Exact& a, long n);

Exact factorial(long n);
Exact integer_binom(long n, long k);  // 0 outside 0 <= k <= n
/// |n|! / prod n_i!
Exact multinomial(const MultiIndex& n);
/// x^k for rational x, integer k >= 0.
Exact pow_exact(const Exact& x, long k);
/// x^k for integer k of either sign (throws on 0^negative).
Exact pow_exact_signed(const Exact& x, long k);

/// Stirling numbers of the second kind, S2(n,k); 0 outside 0 <= k <= n.
Exact stirling2(int n, int k);
/// Signed Stirling numbers of the first kind: x_[n] = sum_k s(n,k) x^k.
Exact stirling1_signed(int n, int k);

/// Terminating generalized hypergeometric series pFq(num; den; z):
/// sum_{j=0}^{k} prod_i (num_i)_(j) / prod_i (den_i)_(j) * z^j / j!,
/// where k is the smallest non-positive-integer witness among num.
/// Throws if no numerator parameter terminates the series, or if a
/// denominator Pochhammer vanishes within the summation range.
struct PfqSeries {
  std::vector<Exact> num;
  std::vector<Exact> den;
  Exact z;
};
Exact hyp_pfq(const PfqSeries& s);

/// Terminating Lauricella function of type A:
///   F_A(a; b; c; z) = sum_m (a)_(|m|) prod_i (b_i)_(m_i) / ((c_i)_(m_i) m_i!) z^m
/// over the finite box m_i <= -b_i. Every b_i must be a non-positive integer.
Exact lauricella_fa(const Exact& a, const std::vector<Exact>& b, const std::vector<Exact>& c,
                    const std::vector<Exact>& z);

}  // namespace osp

#endif
