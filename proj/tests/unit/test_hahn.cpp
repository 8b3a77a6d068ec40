#include <doctest.h>

#include <cmath>

#include "osp/distributions.hpp"
#include "osp/hahn.hpp"
#include "osp/jacobi.hpp"
#include "osp/oracle.hpp"
#include "osp/special.hpp"
#include "test_util.hpp"

using namespace osp;
using osp::test::q;

namespace {
const std::vector<HahnParams> kParams = {
    {q(1), q(1), 4}, {q(1, 2), q(3, 2), 5}, {q(2), q(1, 3), 3}};

Exact dm_sum_norm(const HahnParams& p, const Poly& f) {
  WeightSpec dm = DirichletMultinomial{{p.alpha, p.beta}, p.N};
  return inner_product_brute(f, f, dm);
}
}  // namespace

TEST_CASE("univariate h and q forms") {
  HahnParams p{q(1), q(1), 2};
  Poly h1 = hahn_h(p, 1).to_basis(Basis::monomial);
  CHECK(h1 == Poly::affine(1, q(1), {q(-1)}));  // 1 - r
  CHECK(hahn_value_at_N(p, 1) == Exact(-1));
  CHECK(hahn_q(p, 1).to_basis(Basis::monomial) == Poly::affine(1, q(-1), {q(1)}));
  CHECK(hahn_h(p, 0) == Poly::constant(1, q(1), Basis::falling));

  // h_n(N;N) equals the closed form for all parameter sets.
  for (const auto& pp : kParams)
    for (int n = 0; n <= 3; ++n)
      CHECK(hahn_h(pp, n).eval({Exact(pp.N)}) == hahn_value_at_N(pp, n));
}

TEST_CASE("norms match direct lattice summation") {
  for (const auto& p : kParams) {
    for (int n = 0; n <= 3; ++n) {
      CHECK(dm_sum_norm(p, hahn_h(p, n)) == hahn_h_norm(p, n));
      CHECK(dm_sum_norm(p, hahn_q(p, n)) == hahn_q_norm(p, n));
      CHECK(dm_sum_norm(p, hahn_tilde(p.alpha, p.beta, p.N, n)) == hahn_tilde_norm(p, n));
    }
  }
  HahnParams p112{q(1), q(1), 2};
  CHECK(hahn_h_norm(p112, 1) == q(2, 3));
  CHECK(hahn_tilde_norm(p112, 1) == q(1, 6));
}

TEST_CASE("posterior mixture is the q system scaled by N_[n]/(theta+N)_(n)") {
  Poly t = hahn_tilde(q(1), q(1), 2, 1);
  CHECK(t == Poly::affine(1, q(-1, 2), {q(1, 2)}));  // (r-1)/2
  CHECK(t.eval({q(2)}) == q(1, 2));

  for (const auto& p : kParams) {
    for (int n = 0; n <= 3; ++n) {
      Exact ratio = falling(Exact(p.N), n) / rising(p.theta() + Exact(p.N), n);
      CHECK(hahn_tilde(p.alpha, p.beta, p.N, n) ==
            ratio * hahn_q(p, n).to_basis(Basis::monomial));
      // and the squared-norm counterpart
      CHECK(hahn_tilde_norm(p, n) == ratio * ratio * hahn_q_norm(p, n));
    }
  }
}

TEST_CASE("parameter-swap symmetry on the lattice") {
  for (const auto& p : kParams) {
    HahnParams sw{p.beta, p.alpha, p.N};
    for (int n = 0; n <= 3; ++n) {
      Poly qf = hahn_q(p, n);
      Poly qs = hahn_q(sw, n);
      Exact at0 = qs.eval({q(0)});
      REQUIRE(!at0.is_zero());
      for (long r = 0; r <= p.N; ++r)
        CHECK(qf.eval({Exact(r)}) * at0 == qs.eval({Exact(p.N - r)}));
    }
  }
}

TEST_CASE("multivariate mixture route") {
  // d = 2 reduces to the univariate posterior mixture.
  MVHahnIndex uni{{q(1), q(1)}, MultiIndex{1}, 2};
  CHECK(mv_hahn_mixture(uni) == hahn_tilde(q(1), q(1), 2, 1));

  // d = 3 norm example: 2/5 * 1/8 = 1/20, checked against the lattice sum.
  MVHahnIndex idx{{q(1), q(1), q(1)}, MultiIndex{1, 0}, 2};
  CHECK(mv_hahn_norm(idx) == q(1, 20));
  Poly qt = mv_hahn_mixture(idx);
  WeightSpec dm = DirichletMultinomial{idx.alpha, idx.total};
  CHECK(inner_product_brute(qt, qt, dm) == q(1, 20));
  CHECK(inner_product(qt, qt, dm) == q(1, 20));
}

TEST_CASE("factorized route is exactly the mixture route") {
  std::vector<MVHahnIndex> cases = {
      {{q(1), q(1), q(1)}, MultiIndex{1, 0}, 2},
      {{q(1), q(1), q(1)}, MultiIndex{0, 1}, 1},
      {{q(1), q(2), q(1, 2)}, MultiIndex{1, 1}, 3},
      {{q(1), q(2), q(1, 2)}, MultiIndex{2, 1}, 4},
      {{q(1, 2), q(1), q(2), q(1)}, MultiIndex{1, 1, 1}, 4},
  };
  for (const auto& idx : cases) {
    RouteComparison cmp = compare_hahn_routes(idx);
    CHECK(cmp.proportional);
    CHECK(cmp.constant == Exact(1));
    CHECK(mv_hahn(idx, HahnRoute::product) == mv_hahn(idx, HahnRoute::mixture));
  }
}

TEST_CASE("Bernstein reconstruction reproduces the simplex Jacobi polynomials") {
  // d = 2, alpha = (1,1), r = 1: two Bernstein terms give 2x-1.
  Poly rec = bb_reconstruct_jacobi({q(1), q(1)}, MultiIndex{1});
  CHECK(rec == Poly::affine(1, q(-1), {q(2)}));

  std::vector<std::vector<Exact>> alphas = {{q(1), q(1)}, {q(1), q(2), q(1)},
                                            {q(1, 2), q(3, 2), q(2)}};
  for (const auto& alpha : alphas) {
    const int k = static_cast<int>(alpha.size()) - 1;
    for (const auto& r : indices_up_to_total(k, 3)) {
      Poly diff = bb_reconstruct_jacobi(alpha, r) - mv_jacobi(alpha, r);
      CHECK(diff.is_zero());
    }
  }
}

TEST_CASE("hypergeometric mode: factorized route with negative parameters") {
  // eps = (1,1), one draw: values are +-1, orthogonal under the uniform law.
  MVHahnIndex idx{{q(-1), q(-1)}, MultiIndex{1}, 1};
  CHECK(mv_hahn_product_eval(idx, {1, 0}) == Exact(-1));
  CHECK(mv_hahn_product_eval(idx, {0, 1}) == Exact(1));
  WeightSpec h = Hypergeometric{{1, 1}, 1};
  Exact acc(0);
  for (const auto& pt : support(h)) acc += pmf_exact(h, pt) * mv_hahn_product_eval(idx, pt);
  CHECK(acc == Exact(0));
}

TEST_CASE("limit diagnostic decays like 1/N") {
  std::vector<Exact> grid;
  for (int i = 1; i <= 9; ++i) grid.push_back(q(i, 10));
  auto rows = hahn_jacobi_limit(q(1), q(2), 2, {100, 1000}, grid);
  double e100 = 0, e1000 = 0, g100 = 0, g1000 = 0;
  for (const auto& r : rows) {
    if (r.n != 2) continue;
    if (r.N == 100) e100 = r.sup_error, g100 = r.constant_gap;
    if (r.N == 1000) e1000 = r.sup_error, g1000 = r.constant_gap;
  }
  CHECK(e1000 < e100);
  CHECK(g1000 < g100);
  for (const auto& r : rows)
    if (r.n == 0) CHECK(r.sup_error == 0.0);
}
