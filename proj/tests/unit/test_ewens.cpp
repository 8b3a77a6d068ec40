#include <doctest.h>

#include "osp/distributions.hpp"
#include "osp/ewens.hpp"
#include "osp/special.hpp"
#include "test_util.hpp"

using namespace osp;
using osp::test::q;

TEST_CASE("partition basics") {
  Partition p({2, 1, 1});
  CHECK(p.total() == 4);
  CHECK(p.num_parts() == 3);
  CHECK(p.multiplicities()[0] == 2);
  CHECK(p.multiplicities()[1] == 1);
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(6).size() == 11);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
}

TEST_CASE("Ewens sampling formula examples") {
  CHECK(esf_pmf(q(1), Partition({2})) == q(1, 2));
  CHECK(esf_pmf(q(1), Partition({1, 1})) == q(1, 2));
  CHECK(esf_pmf(q(7, 3), Partition({1})) == Exact(1));
}

TEST_CASE("Ewens total mass is one for samples up to six") {
  for (const Exact& theta : {q(1, 2), q(1), q(3)}) {
    for (int n = 1; n <= 6; ++n) {
      Exact acc(0);
      for (const auto& part : partitions_of(n)) acc += esf_pmf(theta, part);
      CHECK(acc == Exact(1));
    }
  }
}

TEST_CASE("ranked symmetric sampling formula matches brute force") {
  for (int d = 2; d <= 4; ++d) {
    for (const Exact& at : {q(1), q(5, 2)}) {
      for (int n = 1; n <= 4; ++n) {
        Exact acc(0);
        for (const auto& part : partitions_of(n)) {
          Exact v = desf_pmf(at, d, part);
          CHECK(v == ranked_dm_brute(at, d, part));
          acc += v;
        }
        CHECK(acc == Exact(1));
      }
    }
  }
}

TEST_CASE("size-biased stick moment carries the ordered-tuple factor d_[k]/d^k") {
  // E[ prod_i (1 - sum_{j<i} x_j) x_i^{r_i - 1} ] under the size-biased
  // symmetric Dirichlet equals (d_[k]/d^k) m_{alpha,d}(r): summing the
  // size-biasing over ordered distinct coordinate tuples contributes d_[k],
  // while the partition weight is normalized per d^k. Expanding the sticks
  // gives exponent pairs (r_i - 1, tail(r-1) + k - i) per stick.
  for (int d = 2; d <= 4; ++d) {
    for (const Exact& at : {q(1), q(3, 2)}) {
      for (int n = 1; n <= 4; ++n) {
        for (const auto& part : partitions_of(n)) {
          const int k = part.num_parts();
          if (k > d - 1) continue;  // needs k free stick coordinates
          Exact expect(1);
          for (int i = 0; i < k; ++i) {
            Exact a = at / Exact(d) + Exact(1);
            Exact b = Exact(d - 1 - i) * at / Exact(d);
            int pow_b = 0;
            for (int j = i + 1; j < k; ++j) pow_b += part.parts()[j] - 1;
            pow_b += k - 1 - i;
            int pow_a = part.parts()[i] - 1;
            expect *= rising(a, pow_a) * rising(b, pow_b) / rising(a + b, pow_a + pow_b);
          }
          Exact tuples = falling(Exact(d), k) / pow_exact(Exact(d), k);
          CHECK(expect == tuples * desf_partition_weight(at, d, part));
        }
      }
    }
  }
}

TEST_CASE("partition weight equals d^k times the plain symmetric moment") {
  for (int d = 2; d <= 4; ++d) {
    Exact at = q(2);
    for (int n = 1; n <= 4; ++n) {
      for (const auto& part : partitions_of(n)) {
        const int k = part.num_parts();
        if (k > d - 1) continue;  // moment indices live in the free coordinates
        std::vector<Exact> alpha(d, at / Exact(d));
        std::vector<int> idx(d - 1, 0);
        for (int i = 0; i < k; ++i) idx[i] = part.parts()[i];
        Exact mom = moment(Dirichlet{alpha}, MultiIndex(std::move(idx)), Basis::monomial);
        CHECK(desf_partition_weight(at, d, part) == pow_exact(Exact(d), k) * mom);
      }
    }
  }
}
