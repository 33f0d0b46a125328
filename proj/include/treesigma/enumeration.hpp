#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "treesigma/tree.hpp"

namespace treesigma {

struct DegreeFilter {
  enum class Kind { kNone, kAtMost, kExact };

  Kind kind = Kind::kNone;
  int delta = 0;

  static DegreeFilter none() { return {}; }
  static DegreeFilter at_most(int d) { return {Kind::kAtMost, d}; }
  static DegreeFilter exact(int d) { return {Kind::kExact, d}; }

  bool accepts(int max_degree) const {
    switch (kind) {
      case Kind::kAtMost:
        return max_degree <= delta;
      case Kind::kExact:
        return max_degree == delta;
      case Kind::kNone:
        break;
    }
    return true;
  }
};

/// "exact", "at-most", or "none".
std::string filter_name(DegreeFilter::Kind kind);

// Streams one representative of every isomorphism class of free trees of a
// given order, as canonical level sequences rooted at the center (Wright,
// Richmond, Odlyzko and McKay successor rule on top of the Beyer-Hedetniemi
// rooted-tree successor). The degree filter is evaluated on each level
// sequence before anything is materialized.
//
//   FreeTreeGenerator gen(10, DegreeFilter::at_most(4));
//   while (gen.next()) use(gen.parents());
class FreeTreeGenerator {
 public:
  explicit FreeTreeGenerator(int order, DegreeFilter filter = {});

  /// Advances to the next accepted tree; false once exhausted.
  bool next();

  int order() const { return order_; }
  std::span<const int> level_sequence() const { return levels_; }
  /// parent[0] == -1; other entries index earlier vertices.
  std::span<const int> parents() const { return parents_; }
  std::span<const int> degrees() const { return degrees_; }
  int max_degree() const { return max_degree_; }

  std::int64_t sigma() const;
  Tree tree() const { return Tree::from_parents(parents_); }

  /// Number of free trees visited so far, before filtering.
  std::int64_t visited() const { return visited_; }

 private:
  bool advance();
  bool next_rooted(int p);
  bool valid_free(int& left_size) const;
  void derive();

  int order_;
  DegreeFilter filter_;
  bool started_ = false;
  bool done_ = false;
  std::int64_t visited_ = 0;
  std::vector<int> levels_;
  std::vector<int> parents_;
  std::vector<int> degrees_;
  int max_degree_ = 0;
};

/// All free trees of order n, optionally restricted to maximum degree <= max_degree.
std::vector<Tree> enumerate_free_trees(int n, std::optional<int> max_degree = std::nullopt);

std::vector<Tree> enumerate_free_trees(int n, DegreeFilter filter);

}  // namespace treesigma
