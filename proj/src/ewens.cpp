#include "osp/ewens.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "osp/distributions.hpp"
#include "osp/multi_index.hpp"
#include "osp/special.hpp"

namespace osp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("Partition: needs at least one part");
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("Partition: parts must be >= 1");
  if (!std::is_sorted(parts_.rbegin(), parts_.rend()))
    throw std::invalid_argument("Partition: parts must be weakly decreasing");
}

int Partition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::multiplicities() const {
  std::vector<int> b(total(), 0);
  for (int p : parts_) b[p - 1] += 1;
  return b;
}

std::string Partition::str() const {
  std::string s = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

namespace {
void gen_partitions(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

/// (|n| choose r) / prod_i b_i!, the shared combinatorial prefactor.
Exact configuration_count(const Partition& part) {
  Exact c = factorial(part.total());
  for (int p : part.parts()) c /= factorial(p);
  for (int b : part.multiplicities()) c /= factorial(b);
  return c;
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 1) throw std::invalid_argument("partitions_of: n must be >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

Exact esf_partition_weight(const Exact& theta, const Partition& part) {
  // m_theta = theta^k / (theta)_(|n|) * prod_j (r_j - 1)!
  Exact w = pow_exact(theta, part.num_parts()) / rising(theta, part.total());
  for (int p : part.parts()) w *= factorial(p - 1);
  return w;
}

Exact desf_partition_weight(const Exact& alpha_total, int d, const Partition& part) {
  // m_{alpha,d} = |alpha|^k / (|alpha|)_(|n|) * prod_j (|alpha|/d + 1)_(r_j - 1)
  Exact w = pow_exact(alpha_total, part.num_parts()) / rising(alpha_total, part.total());
  Exact a_over_d = alpha_total / Exact(d);
  for (int p : part.parts()) w *= rising(a_over_d + Exact(1), p - 1);
  return w;
}

Exact esf_pmf(const Exact& theta, const Partition& part) {
  if (theta.sign() <= 0) throw std::invalid_argument("esf_pmf: theta must be positive");
  return configuration_count(part) * esf_partition_weight(theta, part);
}

Exact desf_pmf(const Exact& alpha_total, int d, const Partition& part) {
  if (alpha_total.sign() <= 0) throw std::invalid_argument("desf_pmf: |alpha| must be positive");
  if (part.num_parts() > d) return Exact(0);
  // d_[k]/d^k is the ranked correction for placing k occupied coordinates among d.
  Exact c = falling(Exact(d), part.num_parts()) / pow_exact(Exact(d), part.num_parts());
  return c * configuration_count(part) * desf_partition_weight(alpha_total, d, part);
}

Exact ranked_dm_brute(const Exact& alpha_total, int d, const Partition& part) {
  if (part.num_parts() > d) return Exact(0);
  const int n = part.total();
  std::vector<Exact> alpha(d, alpha_total / Exact(d));
  WeightSpec dm = DirichletMultinomial{alpha, n};
  Exact total(0);
  for (const auto& pt : support(dm)) {
    std::vector<int> sorted(pt.begin(), pt.end());
    std::sort(sorted.rbegin(), sorted.rend());
    while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
    if (sorted == part.parts()) total += pmf_exact(dm, pt);
  }
  return total;
}

}  // namespace osp
