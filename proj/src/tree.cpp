#include "treesigma/tree.hpp"

#include <algorithm>
#include <string>

#include "treesigma/errors.hpp"

namespace treesigma {

Tree Tree::from_edges(int order, std::span<const Edge> edges) {
  if (order < 1) throw StructuralError("tree must have at least one vertex, got " + std::to_string(order));
  if (static_cast<long long>(edges.size()) != order - 1LL) {
    throw StructuralError("graph has " + std::to_string(edges.size()) + " edges, expected n-1 = " +
                          std::to_string(order - 1));
  }
  std::vector<std::vector<Vertex>> adj(order);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw StructuralError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} has an endpoint outside 0.." +
                            std::to_string(order - 1));
    }
    if (u == v) throw StructuralError("self-loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (Vertex v = 0; v < order; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw StructuralError("duplicate edge at vertex " + std::to_string(v));
    }
  }

  // n-1 edges plus connectivity implies acyclic.
  std::vector<char> seen(order, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adj[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != order) {
    throw StructuralError("graph is disconnected (" + std::to_string(reached) + " of " + std::to_string(order) +
                          " vertices reachable from 0), so it contains a cycle");
  }
  return Tree(std::move(adj));
}

Tree Tree::from_parents(std::span<const int> parent) {
  std::vector<Edge> edges;
  edges.reserve(parent.empty() ? 0 : parent.size() - 1);
  for (std::size_t v = 1; v < parent.size(); ++v) edges.emplace_back(static_cast<Vertex>(v), parent[v]);
  return from_edges(static_cast<int>(parent.size()), edges);
}

int Tree::max_degree() const {
  int best = 0;
  for (const auto& list : adjacency_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

std::vector<Edge> Tree::edges() const {
  std::vector<Edge> out;
  out.reserve(adjacency_.size() - 1);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Tree Tree::relabeled(std::span<const Vertex> perm) const {
  std::vector<Edge> mapped;
  mapped.reserve(adjacency_.size() - 1);
  for (const auto& [u, v] : edges()) mapped.emplace_back(perm[u], perm[v]);
  return from_edges(order(), mapped);
}

std::int64_t sigma(const Tree& t) {
  std::int64_t total = 0;
  for (const auto& [u, v] : t.edges()) {
    const std::int64_t d = t.degree(u) - t.degree(v);
    total += d * d;
  }
  return total;
}

}  // namespace treesigma
