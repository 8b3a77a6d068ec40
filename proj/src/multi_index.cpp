#include "osp/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace osp {

MultiIndex::MultiIndex(std::vector<int> entries) : e_(std::move(entries)) {
  for (int v : e_)
    if (v < 0) throw std::invalid_argument("MultiIndex: negative entry");
}

int MultiIndex::total() const { return std::accumulate(e_.begin(), e_.end(), 0); }

int MultiIndex::tail_after(int j) const {
  int s = 0;
  for (int i = j + 1; i < dim(); ++i) s += e_[i];
  return s;
}

MultiIndex MultiIndex::with(int i, int v) const {
  std::vector<int> c = e_;
  c.at(i) = v;
  return MultiIndex(std::move(c));
}

MultiIndex MultiIndex::extended(int dim) const {
  if (dim < this->dim()) throw std::invalid_argument("MultiIndex::extended: shrinking");
  std::vector<int> c = e_;
  c.resize(dim, 0);
  return MultiIndex(std::move(c));
}

int MultiIndex::support_end() const {
  for (int i = dim() - 1; i >= 0; --i)
    if (e_[i] != 0) return i;
  return -1;
}

std::string MultiIndex::str() const {
  std::string s = "[";
  for (int i = 0; i < dim(); ++i) {
    if (i) s += ",";
    s += std::to_string(e_[i]);
  }
  return s + "]";
}

namespace {
void fill_with_total(int dim, int total, std::vector<int>& cur, std::vector<MultiIndex>& out) {
  if (dim == 1) {
    cur.push_back(total);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    fill_with_total(dim - 1, total - v, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<MultiIndex> indices_with_total(int dim, int total) {
  if (dim <= 0) throw std::invalid_argument("indices_with_total: dim must be positive");
  std::vector<MultiIndex> out;
  std::vector<int> cur;
  fill_with_total(dim, total, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MultiIndex> indices_up_to_total(int dim, int max_total) {
  std::vector<MultiIndex> out;
  for (int t = 0; t <= max_total; ++t) {
    auto part = indices_with_total(dim, t);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace osp
