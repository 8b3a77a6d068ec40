#ifndef OSP_EWENS_HPP
#define OSP_EWENS_HPP

#include <string>
#include <vector>

#include "osp/exact.hpp"

namespace osp {

/// Integer partition: part sizes r_1 >= ... >= r_k >= 1.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);
  const std::vector<int>& parts() const { return parts_; }
  int total() const;      // |n| = sum of parts
  int num_parts() const { return static_cast<int>(parts_.size()); }
  /// b[i] = number of parts equal to i+1, for i = 0..total()-1.
  std::vector<int> multiplicities() const;
  std::string str() const;  // "[2,1,1]"

  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
};

/// All partitions of n, lexicographically sorted by part vector.
std::vector<Partition> partitions_of(int n);

/// Ewens sampling formula: probability of the unordered configuration with
/// the given part sizes in a sample of size part.total().
Exact esf_pmf(const Exact& theta, const Partition& part);

/// Ranked symmetric Dirichlet-multinomial sampling formula (the finite-d
/// analogue of the Ewens formula) with alpha = (|alpha|/d, ..., |alpha|/d).
Exact desf_pmf(const Exact& alpha_total, int d, const Partition& part);

/// The exchangeable partition weights m_theta / m_{alpha,d} entering the two
/// formulas above.
Exact esf_partition_weight(const Exact& theta, const Partition& part);
Exact desf_partition_weight(const Exact& alpha_total, int d, const Partition& part);

/// Brute-force ranked pmf: sums the symmetric Dirichlet-multinomial over all
/// arrangements of the parts among d coordinates. Cross-checks desf_pmf.
Exact ranked_dm_brute(const Exact& alpha_total, int d, const Partition& part);

}  // namespace osp

#endif
