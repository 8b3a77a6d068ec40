#include <doctest.h>

#include "osp/families.hpp"
#include "osp/jacobi.hpp"
#include "osp/oracle.hpp"
#include "test_util.hpp"

using namespace osp;
using osp::test::q;

TEST_CASE("inner product examples") {
  WeightSpec dir3 = Dirichlet{{q(1), q(1), q(1)}};
  Poly one = Poly::constant(2, q(1));
  CHECK(inner_product(one, one, dir3) == Exact(1));
  CHECK(inner_product(Poly::variable(2, 0), Poly::variable(2, 1), dir3) == q(1, 12));

  WeightSpec dir2 = Dirichlet{{q(1), q(1)}};
  Poly r = Poly::affine(1, q(-1), {q(2)});
  CHECK(inner_product(r, r, dir2) == q(1, 3));
}

TEST_CASE("moment reduction agrees with brute-force support sums") {
  test::Rng rng(31);
  WeightSpec dm = DirichletMultinomial{{q(1), q(3, 2), q(2)}, 5};
  WeightSpec h = Hypergeometric{{3, 2, 2}, 4};
  for (int trial = 0; trial < 10; ++trial) {
    Poly a = rng.poly(2, 3, 3), b = rng.poly(2, 2, 3);
    CHECK(inner_product(a, b, dm) == inner_product_brute(a, b, dm));
    CHECK(inner_product(a, b, h) == inner_product_brute(a, b, h));
  }
}

TEST_CASE("gram matrices at small degree") {
  auto [fam, w] = jacobi_family({q(1), q(1)}, 2);
  GramReport rep = gram_matrix(fam, w);
  REQUIRE(rep.indices.size() == 3);
  CHECK(rep.matrix[0][0] == Exact(1));
  CHECK(rep.matrix[1][1] == q(1, 3));
  CHECK(rep.matrix[2][2] == q(1, 5));
  CHECK(rep.orthogonal());
  CHECK(rep.diagonal_ok());

  auto [hfam, hw] = hahn_family({q(1), q(1)}, 2, 2);
  GramReport hrep = gram_matrix(hfam, hw);
  CHECK(hrep.matrix[0][0] == Exact(1));
  CHECK(hrep.matrix[1][1] == q(1, 6));
  CHECK(hrep.matrix[2][2] == q(1, 50));
  CHECK(hrep.clean());
}

TEST_CASE("degree-zero gram is the 1x1 identity") {
  auto [fam, w] = jacobi_family({q(1), q(2), q(3)}, 0);
  GramReport rep = gram_matrix(fam, w);
  REQUIRE(rep.matrix.size() == 1);
  CHECK(rep.matrix[0][0] == Exact(1));
}

TEST_CASE("fourier expansion") {
  auto [fam, w] = jacobi_family({q(1), q(1)}, 2);

  // f = x: a_0 = 1/2, a_1 = 1/6, reconstruction x = 1/2 + (1/2)(2x-1).
  FourierExpansion fe = fourier_expand(Poly::variable(1, 0), fam, w);
  CHECK(fe.coefficients[0] == q(1, 2));
  CHECK(fe.coefficients[1] == q(1, 6));
  CHECK(fe.norms[1] == q(1, 3));
  CHECK(fe.residual.is_zero());

  // f = x^2 expands exactly at degree 2.
  FourierExpansion fe2 = fourier_expand(poly_pow(Poly::variable(1, 0), 2), fam, w);
  CHECK(fe2.residual.is_zero());

  // f = G_m picks out the delta pattern.
  Poly g1 = fam.make(MultiIndex{1});
  FourierExpansion fg = fourier_expand(g1, fam, w);
  CHECK(fg.coefficients[0] == Exact(0));
  CHECK(fg.coefficients[1] == fg.norms[1]);
  CHECK(fg.coefficients[2] == Exact(0));
  CHECK(fg.residual.is_zero());
}

TEST_CASE("fourier residual vanishes for random polynomials across weights") {
  test::Rng rng(37);
  auto [jf, jw] = jacobi_family({q(1), q(2), q(1, 2)}, 3);
  auto [hf, hw] = hahn_family({q(1), q(1, 2)}, 4, 3);
  for (int trial = 0; trial < 5; ++trial) {
    CHECK(fourier_expand(rng.poly(2, 3, 4), jf, jw).residual.is_zero());
    CHECK(fourier_expand(rng.poly(1, 3, 3), hf, hw).residual.is_zero());
  }
}
