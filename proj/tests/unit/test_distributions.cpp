#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "osp/distributions.hpp"
#include "osp/special.hpp"
#include "test_util.hpp"

using namespace osp;
using osp::test::q;

TEST_CASE("weight validation and shapes") {
  CHECK_THROWS_AS(validate(WeightSpec{Dirichlet{{q(1), q(-1)}}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(WeightSpec{NegBinProduct{{q(1)}, q(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(WeightSpec{Hypergeometric{{2, 2}, 5}}), std::invalid_argument);
  CHECK(weight_dim(WeightSpec{Dirichlet{{q(1), q(1), q(1)}}}) == 2);
  CHECK(weight_dim(WeightSpec{GammaProduct{{q(1), q(1)}, q(1)}}) == 2);
  CHECK(weight_dim(WeightSpec{GemTruncated{q(1), 4}}) == 3);
  CHECK(natural_basis(WeightSpec{DirichletMultinomial{{q(1), q(1)}, 3}}) == Basis::falling);
}

TEST_CASE("pmf examples") {
  WeightSpec dm = DirichletMultinomial{{q(1), q(1)}, 2};
  CHECK(pmf_exact(dm, {1, 1}) == q(1, 3));
  WeightSpec nb = NegBinProduct{{q(1)}, q(1, 2)};
  CHECK(pmf_exact(nb, {0}) == q(1, 2));
  WeightSpec h = Hypergeometric{{1, 1}, 1};
  CHECK(pmf_exact(h, {1, 0}) == q(1, 2));
  CHECK_THROWS_AS(pmf_exact(dm, {1, 0}), std::domain_error);
  CHECK_THROWS_AS(pmf_exact(WeightSpec{NegBinProduct{{q(1, 2)}, q(1, 2)}}, {0}),
                  std::domain_error);
}

TEST_CASE("moment examples") {
  WeightSpec dir = Dirichlet{{q(1), q(1), q(1)}};
  CHECK(moment(dir, MultiIndex{1, 1}, Basis::monomial) == q(1, 12));
  WeightSpec nb = NegBinProduct{{q(1)}, q(1, 2)};
  CHECK(moment(nb, MultiIndex{1}, Basis::falling) == Exact(1));
  WeightSpec gp = GammaProduct{{q(2), q(1)}, q(1)};
  CHECK(moment(gp, MultiIndex{0, 0}, Basis::monomial) == Exact(1));
  CHECK(moment(gp, MultiIndex{2, 1}, Basis::monomial) == Exact(6));
  CHECK_THROWS_AS(moment(dir, MultiIndex{1, 1}, Basis::falling), std::invalid_argument);
}

TEST_CASE("finite-support pmfs sum to one exactly") {
  for (int d = 2; d <= 3; ++d) {
    for (int total = 0; total <= 6; ++total) {
      std::vector<Exact> alpha;
      for (int i = 0; i < d; ++i) alpha.push_back(q(i + 1, 2));
      WeightSpec dm = DirichletMultinomial{alpha, total};
      Exact acc(0);
      for (const auto& pt : support(dm)) acc += pmf_exact(dm, pt);
      CHECK(acc == Exact(1));
    }
  }
  WeightSpec h = Hypergeometric{{3, 2, 1}, 4};
  Exact acc(0);
  for (const auto& pt : support(h)) acc += pmf_exact(h, pt);
  CHECK(acc == Exact(1));
}

TEST_CASE("negative binomial mass sums to one within a proven tail bound") {
  // S_T = sum_{k<=T} (alpha)_(k) p^k / k! with tail bounded geometrically once
  // p (alpha + k)/(k + 1) <= rho < 1; total mass is S_inf (1-p)^alpha = 1.
  Exact alpha = q(5, 2), p = q(2, 5);
  long T = 80;
  Exact partial(0), term(1);
  for (long k = 0;; ++k) {
    partial += term;
    if (k == T) break;
    term *= (alpha + Exact(k)) * p / Exact(k + 1);
  }
  Exact next = term * (alpha + Exact(T)) * p / Exact(T + 1);
  Exact rho = (alpha + Exact(T + 1)) * p / Exact(T + 2);
  REQUIRE(rho < q(1, 2));
  Exact tail_bound = next / (Exact(1) - rho);
  double total = partial.to_double() * std::pow(1.0 - p.to_double(), alpha.to_double());
  double bound = tail_bound.to_double();
  CHECK(std::abs(total - 1.0) <= bound + 1e-12);
  CHECK(bound < 1e-12);
}

TEST_CASE("lattice moments equal brute-force support sums") {
  // Dirichlet-multinomial falling moments, d <= 3, totals <= 6.
  for (int total = 1; total <= 6; ++total) {
    std::vector<Exact> alpha{q(1), q(3, 2), q(2)};
    WeightSpec dm = DirichletMultinomial{alpha, total};
    for (const auto& l : indices_up_to_total(2, 3)) {
      Exact direct(0);
      for (const auto& pt : support(dm)) {
        Exact t = pmf_exact(dm, pt);
        for (int i = 0; i < 2; ++i) t *= falling(Exact(pt[i]), l[i]);
        direct += t;
      }
      CHECK(direct == moment(dm, l, Basis::falling));
    }
  }
  // Hypergeometric: validates the formal negative-parameter rule.
  WeightSpec h = Hypergeometric{{3, 2, 2}, 4};
  for (const auto& l : indices_up_to_total(2, 4)) {
    Exact direct(0);
    for (const auto& pt : support(h)) {
      Exact t = pmf_exact(h, pt);
      for (int i = 0; i < 2; ++i) t *= falling(Exact(pt[i]), l[i]);
      direct += t;
    }
    CHECK(direct == moment(h, l, Basis::falling));
  }
}

TEST_CASE("stick moments") {
  // One Beta(1,1) stick: uniform moments.
  CHECK(stick_monomial_moment({{q(1), q(1)}}, MultiIndex{2}) == q(1, 3));
  // GEM with theta = 1: E[x1] = 1/2, E[x2] = E[(1-B1) B2] = 1/4.
  WeightSpec gem = GemTruncated{q(1), 3};
  CHECK(moment(gem, MultiIndex{1, 0}, Basis::monomial) == q(1, 2));
  CHECK(moment(gem, MultiIndex{0, 1}, Basis::monomial) == q(1, 4));
  // Truncation independence: deeper truncations agree on shared coordinates.
  WeightSpec gem5 = GemTruncated{q(1), 5};
  CHECK(moment(gem5, MultiIndex{1, 0, 0, 0}, Basis::monomial) == q(1, 2));
  CHECK(moment(gem5, MultiIndex{2, 1, 0, 0}, Basis::monomial) ==
        moment(GemTruncated{q(1), 3}, MultiIndex{2, 1}, Basis::monomial));
}

TEST_CASE("posterior conjugacy recursion for Dirichlet moments") {
  // E_alpha[x^{r+s}] = E_alpha[x^r] * E_{alpha+r}[x^s]
  test::Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Exact> alpha{rng.positive_rational(), rng.positive_rational(),
                             rng.positive_rational()};
    MultiIndex r{static_cast<int>(rng.small_int(0, 3)), static_cast<int>(rng.small_int(0, 3))};
    MultiIndex s{static_cast<int>(rng.small_int(0, 3)), static_cast<int>(rng.small_int(0, 3))};
    std::vector<int> rs{r[0] + s[0], r[1] + s[1]};
    std::vector<Exact> posterior{alpha[0] + Exact(r[0]), alpha[1] + Exact(r[1]), alpha[2]};
    CHECK(moment(Dirichlet{alpha}, MultiIndex(std::move(rs)), Basis::monomial) ==
          moment(Dirichlet{alpha}, r, Basis::monomial) *
              moment(Dirichlet{posterior}, s, Basis::monomial));
  }
}

TEST_CASE("density evaluation") {
  // Dirichlet(1,2) on [0,1]: density 2(1-x).
  WeightSpec beta12 = Dirichlet{{q(1), q(2)}};
  CHECK(density_exact(beta12, {q(1, 2)}) == Exact(1));
  CHECK(density_exact(beta12, {q(1, 4)}) == q(3, 2));
  CHECK_THROWS_AS(density_exact(WeightSpec{Dirichlet{{q(1, 2), q(1, 2)}}}, {q(1, 2)}),
                  std::domain_error);
  // Uniform Dirichlet on the triangle has constant density Gamma(3) = 2.
  WeightSpec flat = Dirichlet{{q(1), q(1), q(1)}};
  CHECK(density_exact(flat, {q(1, 4), q(1, 3)}) == Exact(2));
  // Integer parameters, d = 3: 1/B(2,1,3) = 5!/(1!\,0!\,2!) = 60, so the
  // density at (1/2, 1/4) is 60 * (1/2) * (1/4)^2 = 15/8.
  WeightSpec d3 = Dirichlet{{q(2), q(1), q(3)}};
  CHECK(density_exact(d3, {q(1, 2), q(1, 4)}) == q(15, 8));
  // Arcsine density at 1/2 is 2/pi.
  std::string s = pmf_or_density_str(WeightSpec{Dirichlet{{q(1, 2), q(1, 2)}}}, {q(1, 2)});
  CHECK(s.substr(0, 12) == "0.6366197723");
  // Discrete families route through the exact pmf.
  std::string sdm =
      pmf_or_density_str(WeightSpec{DirichletMultinomial{{q(1), q(1)}, 2}}, {q(1), q(1)}, 20);
  CHECK(sdm.substr(0, 8) == "0.333333");
}

TEST_CASE("Monte Carlo sanity for Dirichlet and stick moments") {
  std::mt19937 eng(12345);
  std::gamma_distribution<double> g1(1.0, 1.0), g2(2.0, 1.0), g3(3.0, 1.0);
  const int n = 100000;
  double acc = 0, acc2 = 0;
  for (int i = 0; i < n; ++i) {
    double y1 = g1(eng), y2 = g2(eng), y3 = g3(eng);
    double s = y1 + y2 + y3;
    double v = (y1 / s) * (y2 / s) * (y2 / s);  // x1 x2^2
    acc += v;
    acc2 += v * v;
  }
  double mean = acc / n;
  double se = std::sqrt((acc2 / n - mean * mean) / n);
  double exact_val =
      moment(Dirichlet{{q(1), q(2), q(3)}}, MultiIndex{1, 2}, Basis::monomial).to_double();
  CHECK(std::abs(mean - exact_val) <= 4 * se);

  // GEM(3/2) stick sample: x2 = (1-B1) B2 with iid Beta(1, 3/2) sticks.
  std::gamma_distribution<double> ga(1.0, 1.0), gb(1.5, 1.0);
  acc = acc2 = 0;
  for (int i = 0; i < n; ++i) {
    double b1 = [&] { double u = ga(eng), v = gb(eng); return u / (u + v); }();
    double b2 = [&] { double u = ga(eng), v = gb(eng); return u / (u + v); }();
    double v = (1 - b1) * b2;
    v = v * v;  // x2^2
    acc += v;
    acc2 += v * v;
  }
  mean = acc / n;
  se = std::sqrt((acc2 / n - mean * mean) / n);
  double ex = moment(GemTruncated{q(3, 2), 3}, MultiIndex{0, 2}, Basis::monomial).to_double();
  CHECK(std::abs(mean - ex) <= 4 * se);
}
