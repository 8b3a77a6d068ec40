#include <doctest.h>

#include <stdexcept>

#include "osp/exact.hpp"
#include "osp/multi_index.hpp"
#include "osp/poly.hpp"
#include "osp/report_io.hpp"
#include "osp/special.hpp"
#include "test_util.hpp"

using namespace osp;
using osp::test::q;

TEST_CASE("Exact canonical form and parsing") {
  CHECK(Exact(2, 4) == Exact(1, 2));
  CHECK(Exact(-2, -4) == Exact(1, 2));
  CHECK(Exact(0, 7).str() == "0/1");
  CHECK(Exact::parse("3/6") == Exact(1, 2));
  CHECK(Exact::parse("-5") == Exact(-5));
  CHECK(Exact(1, 3).str() == "1/3");
  CHECK(Exact(7).str_short() == "7");
  CHECK_THROWS_AS(Exact(1, 0), std::domain_error);
  CHECK_THROWS_AS(Exact::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Exact(1) / Exact(0), std::domain_error);
  CHECK(Exact(1, 3) + Exact(1, 6) == Exact(1, 2));
}

TEST_CASE("MultiIndex tails and enumeration") {
  MultiIndex n{1, 0, 2};
  CHECK(n.total() == 3);
  CHECK(n.tail_after(0) == 2);
  CHECK(n.tail_after(2) == 0);
  CHECK(n.str() == "[1,0,2]");
  CHECK(indices_with_total(3, 2).size() == 6);
  CHECK(indices_up_to_total(2, 3).size() == 10);
  CHECK_THROWS_AS(MultiIndex({-1}), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic examples") {
  Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1);
  Poly prod = x1 * x2;
  CHECK(prod.coeff(MultiIndex{1, 1}) == Exact(1));
  CHECK(prod.terms().size() == 1);

  Poly x = Poly::variable(1, 0);
  Poly shifted = x - Poly::constant(1, q(1, 2));
  CHECK(shifted + Poly::constant(1, q(1, 2)) == x);

  Poly r = Poly::affine(1, q(-1), {q(2)});  // 2x - 1
  Poly sq = r * r;
  Poly expect(1);
  expect.add_term(MultiIndex{2}, q(4));
  expect.add_term(MultiIndex{1}, q(-4));
  expect.add_term(MultiIndex{0}, q(1));
  CHECK(sq == expect);

  CHECK_THROWS_AS(x1 + Poly::variable(3, 0), std::invalid_argument);
  Poly f(1, Basis::falling);
  f.add_term(MultiIndex{1}, q(1));
  CHECK_THROWS_AS(f * f, std::domain_error);
}

TEST_CASE("evaluation in both bases") {
  Poly r = Poly::affine(1, q(-1), {q(2)});
  CHECK(r.eval({q(1, 2)}) == Exact(0));

  Poly fall(1, Basis::falling);
  fall.add_term(MultiIndex{2}, q(1));
  CHECK(fall.eval({q(3)}) == Exact(6));

  Poly sq = r * r;
  CHECK(sq.eval({q(1, 3)}) == q(1, 9));
  CHECK(sq.eval_double({0.5}) == doctest::Approx(0.0));
  CHECK_THROWS_AS(r.eval({q(1), q(2)}), std::invalid_argument);
}

TEST_CASE("compose_ratio_clear examples") {
  Poly t = Poly::variable(1, 0);
  Poly x1 = Poly::variable(2, 0);
  Poly v = Poly::affine(2, q(1), {q(0), q(-1)});  // 1 - x2
  CHECK(compose_ratio_clear(t, 1, x1, v) == x1);

  Poly qq = Poly::affine(1, q(-1), {q(2)});  // 2t - 1
  Poly res = compose_ratio_clear(qq, 1, x1, v);
  CHECK(res == Poly::affine(2, q(-1), {q(2), q(1)}));  // 2x1 + x2 - 1

  Poly one = Poly::constant(1, q(1));
  Poly v1 = Poly::affine(2, q(1), {q(-1), q(0)});  // 1 - x1
  CHECK(compose_ratio_clear(one, 2, x1, v1) == v1 * v1);

  CHECK_THROWS_AS(compose_ratio_clear(qq, 0, x1, v), std::invalid_argument);
}

TEST_CASE("compose_ratio_clear agrees with rational evaluation") {
  test::Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Poly p = rng.poly(1, 3, 3);
    int deg = std::max(p.total_degree(), 0);
    int M = deg + static_cast<int>(rng.small_int(0, 2));
    Poly u = Poly::affine(2, rng.rational(), {rng.rational(), rng.rational()});
    Poly v = Poly::affine(2, rng.rational(3, 2) + q(4), {rng.rational(), rng.rational()});
    Poly composed = compose_ratio_clear(p, M, u, v);
    auto pt = rng.point(2, 2, 3);
    Exact vv = v.eval(pt);
    REQUIRE(!vv.is_zero());
    Exact direct = pow_exact(vv, M) * p.eval({u.eval(pt) / vv});
    CHECK(composed.eval(pt) == direct);
  }
}

TEST_CASE("basis conversion") {
  Poly x2 = poly_pow(Poly::variable(1, 0), 2);
  Poly conv = x2.to_basis(Basis::falling);
  CHECK(conv.coeff(MultiIndex{2}) == Exact(1));
  CHECK(conv.coeff(MultiIndex{1}) == Exact(1));

  CHECK(Poly::constant(1, q(1)).to_basis(Basis::falling) ==
        Poly::constant(1, q(1), Basis::falling));

  Poly fall(1, Basis::falling);
  fall.add_term(MultiIndex{2}, q(1));
  Poly mono = fall.to_basis(Basis::monomial);
  CHECK(mono.coeff(MultiIndex{2}) == Exact(1));
  CHECK(mono.coeff(MultiIndex{1}) == Exact(-1));
}

TEST_CASE("basis round trip is the identity up to degree 6, dim 3") {
  test::Rng rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    Poly p = rng.poly(3, 6, 5);
    CHECK(p.to_basis(Basis::falling).to_basis(Basis::monomial) == p);
  }
}

TEST_CASE("ring laws hold exactly on sampled polynomials") {
  test::Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    Poly a = rng.poly(2, 3, 3), b = rng.poly(2, 3, 3), c = rng.poly(2, 3, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("evaluation commutes with multiplication") {
  test::Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Poly a = rng.poly(2, 3, 3), b = rng.poly(2, 3, 3);
    auto pt = rng.point(2);
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
  }
}

TEST_CASE("derivative") {
  Poly sq = poly_pow(Poly::affine(1, q(-1), {q(2)}), 2);
  CHECK(sq.derivative(0) == Poly::affine(1, q(-4), {q(8)}));
  CHECK(sq.derivative(0, 2) == Poly::constant(1, q(8)));
  Poly xy = Poly::variable(2, 0) * Poly::variable(2, 1);
  CHECK(xy.derivative(0) == Poly::variable(2, 1));
  Poly fall(1, Basis::falling);
  fall.add_term(MultiIndex{1}, q(1));
  CHECK_THROWS_AS(fall.derivative(0), std::domain_error);
}

TEST_CASE("poly JSON round trip with sorted terms") {
  Poly p(2);
  p.add_term(MultiIndex{2, 0}, q(-3, 7));
  p.add_term(MultiIndex{0, 1}, q(5));
  std::string js = poly_to_json(p);
  CHECK(poly_from_json(js) == p);
  // lexicographic order: [0,1] before [2,0]
  CHECK(js.find("[0,1]") == std::string::npos);  // arrays are pretty-printed
  CHECK(js.find("5/1") < js.find("-3/7"));
}

TEST_CASE("parse helpers") {
  auto v = parse_exact_list("1,1/2,-3/4");
  REQUIRE(v.size() == 3);
  CHECK(v[1] == q(1, 2));
  CHECK(parse_index("1,0,2") == MultiIndex{1, 0, 2});
  CHECK_THROWS_AS(parse_exact_list(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_index("1,-2"), std::invalid_argument);
}
