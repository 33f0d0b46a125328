#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treesigma/rational.hpp"
#include "treesigma/tree.hpp"

namespace treesigma {

// Vertex-degree counts n_i and edge degree-pair multiplicities m_{i,j}
// (i <= j) of a tree. `delta` is the tree's maximum degree.
class DegreeProfile {
 public:
  DegreeProfile(int order, int delta);

  int order() const { return order_; }
  int delta() const { return delta_; }

  std::int64_t degree_count(int i) const;           // n_i, 0 outside 1..delta
  std::int64_t pair_count(int i, int j) const;      // m_{i,j}, symmetric in (i, j)
  void add_vertex(int degree);
  void add_edge(int deg_u, int deg_v);

  std::int64_t edge_count() const;                  // sum of m_{i,j}
  std::int64_t sigma() const;                       // sum of m_{i,j} (i-j)^2
  Rational weighted_edge_sum() const;               // sum of (1/i + 1/j) m_{i,j}

  /// Human-readable description of every violated tree identity (vertex sum,
  /// degree sum, per-degree handshake, edge count, weighted edge sum).
  /// Empty when the profile is consistent with a tree of `order` vertices.
  std::vector<std::string> identity_violations() const;

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;

 private:
  std::size_t pair_index(int i, int j) const;

  int order_;
  int delta_;
  std::vector<std::int64_t> degree_counts_;  // index 0..delta
  std::vector<std::int64_t> pair_counts_;    // upper triangle, 1 <= i <= j <= delta
};

DegreeProfile profile(const Tree& t);

}  // namespace treesigma
