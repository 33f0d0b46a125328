#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace treesigma {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Undirected labeled tree on vertices 0..n-1. Immutable once built; the
// constructor rejects anything that is not a tree (wrong edge count,
// disconnected, loops, repeated edges). Degrees are derived from adjacency.
class Tree {
 public:
  /// Throws StructuralError naming the violated invariant.
  static Tree from_edges(int order, std::span<const Edge> edges);

  /// Tree with edges {v, parent[v]} for v = 1..n-1; parent[0] is ignored.
  static Tree from_parents(std::span<const int> parent);

  /// The single-vertex tree.
  Tree() : adjacency_(1) {}

  int order() const { return static_cast<int>(adjacency_.size()); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int max_degree() const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Same tree with vertex v renamed to perm[v]; perm must be a permutation of 0..n-1.
  Tree relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  explicit Tree(std::vector<std::vector<Vertex>> adjacency) : adjacency_(std::move(adjacency)) {}

  std::vector<std::vector<Vertex>> adjacency_;
};

/// Sum over edges uv of (deg u - deg v)^2.
std::int64_t sigma(const Tree& t);

}  // namespace treesigma
