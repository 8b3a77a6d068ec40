#ifndef OSP_MULTI_INDEX_HPP
#define OSP_MULTI_INDEX_HPP

#include <string>
#include <vector>

namespace osp {

/// Vector of non-negative integer exponents / counts.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}
  static MultiIndex zeros(int dim) { return MultiIndex(std::vector<int>(dim, 0)); }

  int dim() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[i]; }
  /// |n| = sum of entries.
  int total() const;
  /// Sum of entries strictly after position j (0-based): e_[j+1] + ... + e_[dim-1].
  int tail_after(int j) const;
  /// Copy with entry i replaced by v.
  MultiIndex with(int i, int v) const;
  /// Copy extended to the given dimension with trailing zeros.
  MultiIndex extended(int dim) const;
  /// Index of the last nonzero entry, or -1 if all zero.
  int support_end() const;

  const std::vector<int>& entries() const { return e_; }
  std::string str() const;  // "[1,0,2]"

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return a.e_ != b.e_; }
  /// Lexicographic; used for deterministic term ordering.
  friend bool operator<(const MultiIndex& a, const MultiIndex& b) { return a.e_ < b.e_; }

 private:
  std::vector<int> e_;
};

/// All indices of the given dimension with |n| == total, lexicographically sorted.
std::vector<MultiIndex> indices_with_total(int dim, int total);
/// All indices of the given dimension with |n| <= max_total, lexicographically sorted.
std::vector<MultiIndex> indices_up_to_total(int dim, int max_total);

}  // namespace osp

#endif
