#include "treesigma/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

namespace treesigma {

std::string filter_name(DegreeFilter::Kind kind) {
  switch (kind) {
    case DegreeFilter::Kind::kExact:
      return "exact";
    case DegreeFilter::Kind::kAtMost:
      return "at-most";
    case DegreeFilter::Kind::kNone:
      break;
  }
  return "none";
}

FreeTreeGenerator::FreeTreeGenerator(int order, DegreeFilter filter) : order_(order), filter_(filter) {
  if (order < 1) throw std::invalid_argument("free tree order must be >= 1");
  // Start from the path rooted at its center.
  for (int i = 0; i <= order / 2; ++i) levels_.push_back(i);
  for (int i = 1; i < (order + 1) / 2; ++i) levels_.push_back(i);
  parents_.assign(static_cast<std::size_t>(order), -1);
  degrees_.assign(static_cast<std::size_t>(order), 0);
}

// Beyer-Hedetniemi: the next rooted level sequence after resetting from
// position p. Returns false when the sequence is the last (the star).
bool FreeTreeGenerator::next_rooted(int p) {
  if (p <= 0) return false;
  int q = p - 1;
  while (levels_[q] != levels_[p] - 1) --q;
  for (int i = p; i < order_; ++i) levels_[i] = levels_[i - p + q];
  return true;
}

// A center-rooted level sequence is the canonical free tree iff the first
// subtree of the root is not "larger" than the rest of the tree: lower
// height, or equal height with fewer vertices, or equal size and not
// lexicographically greater.
bool FreeTreeGenerator::valid_free(int& left_size) const {
  int m = 1;
  while (m < order_ && levels_[m] != 1) ++m;
  // m is now 1; find the second root child.
  int second = m + 1;
  while (second < order_ && levels_[second] != 1) ++second;
  const int left_len = second - 1;  // vertices 1..second-1, levels reduced by 1
  left_size = left_len;
  const int rest_len = order_ - second + 1;  // root + vertices second..n-1

  int left_height = 0;
  for (int i = 1; i < second; ++i) left_height = std::max(left_height, levels_[i] - 1);
  int rest_height = 0;
  for (int i = second; i < order_; ++i) rest_height = std::max(rest_height, levels_[i]);

  if (rest_height < left_height) return false;
  if (rest_height > left_height) return true;
  if (left_len > rest_len) return false;
  if (left_len < rest_len) return true;
  // Same length: compare left (levels - 1) against rest (0, levels...).
  for (int k = 0; k < left_len; ++k) {
    const int a = levels_[1 + k] - 1;
    const int b = (k == 0) ? 0 : levels_[second + k - 1];
    if (a != b) return a < b;
  }
  return true;
}

bool FreeTreeGenerator::advance() {
  if (done_) return false;
  if (order_ <= 2) {
    if (started_) {
      done_ = true;
      return false;
    }
    started_ = true;
    return true;
  }
  if (started_) {
    int p = order_ - 1;
    while (p > 0 && levels_[p] == 1) --p;
    if (!next_rooted(p)) {
      done_ = true;
      return false;
    }
  }
  started_ = true;
  for (;;) {
    int left_size = 0;
    if (valid_free(left_size)) return true;
    // Jump past every rooted sequence sharing this oversized first subtree.
    const int p = left_size;
    const int old_level = levels_[p];
    if (!next_rooted(p)) {
      done_ = true;
      return false;
    }
    if (old_level > 2) {
      int second = 2;
      while (second < order_ && levels_[second] != 1) ++second;
      int new_left_height = 0;
      for (int i = 1; i < second; ++i) new_left_height = std::max(new_left_height, levels_[i] - 1);
      const int suffix = new_left_height + 1;
      for (int s = 0; s < suffix; ++s) levels_[order_ - suffix + s] = s + 1;
    }
  }
}

void FreeTreeGenerator::derive() {
  std::vector<int> last_at_level(static_cast<std::size_t>(order_), -1);
  std::fill(degrees_.begin(), degrees_.end(), 0);
  parents_[0] = -1;
  last_at_level[0] = 0;
  for (int v = 1; v < order_; ++v) {
    const int parent = last_at_level[levels_[v] - 1];
    parents_[v] = parent;
    ++degrees_[v];
    ++degrees_[parent];
    last_at_level[levels_[v]] = v;
  }
  max_degree_ = order_ == 1 ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

bool FreeTreeGenerator::next() {
  while (advance()) {
    ++visited_;
    derive();
    if (filter_.accepts(max_degree_)) return true;
  }
  return false;
}

std::int64_t FreeTreeGenerator::sigma() const {
  std::int64_t total = 0;
  for (int v = 1; v < order_; ++v) {
    const std::int64_t d = degrees_[v] - degrees_[parents_[v]];
    total += d * d;
  }
  return total;
}

std::vector<Tree> enumerate_free_trees(int n, DegreeFilter filter) {
  std::vector<Tree> out;
  FreeTreeGenerator gen(n, filter);
  while (gen.next()) out.push_back(gen.tree());
  return out;
}

std::vector<Tree> enumerate_free_trees(int n, std::optional<int> max_degree) {
  return enumerate_free_trees(n, max_degree ? DegreeFilter::at_most(*max_degree) : DegreeFilter::none());
}

}  // namespace treesigma
