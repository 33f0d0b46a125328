#include "treesigma/canonical.hpp"

#include <algorithm>

namespace treesigma {

std::vector<Vertex> tree_centers(const Tree& t) {
  const int n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    return all;
  }
  std::vector<int> remaining_degree(static_cast<std::size_t>(n));
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    remaining_degree[v] = t.degree(v);
    if (remaining_degree[v] == 1) layer.push_back(v);
  }
  int left = n;
  while (left > 2) {
    left -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : t.neighbors(leaf)) {
        if (--remaining_degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string rooted_encoding(const Tree& t, Vertex root) {
  const int n = t.order();
  // Iterative post-order so long paths do not exhaust the stack.
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<Vertex> stack{root};
  parent[root] = root;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (Vertex w : t.neighbors(u)) {
      if (parent[w] == -1) {
        parent[w] = u;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::vector<std::string>> child_codes(static_cast<std::size_t>(n));
  std::string code;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& kids = child_codes[*it];
    std::sort(kids.begin(), kids.end());
    code.clear();
    code.push_back('(');
    for (auto& k : kids) code += k;
    code.push_back(')');
    kids.clear();
    kids.shrink_to_fit();
    if (*it == root) break;
    child_codes[parent[*it]].push_back(code);
  }
  return code;
}

CanonicalForm canonical_form(const Tree& t) {
  const auto centers = tree_centers(t);
  std::string best = rooted_encoding(t, centers.front());
  if (centers.size() == 2) best = std::min(best, rooted_encoding(t, centers.back()));
  return CanonicalForm{std::move(best)};
}

}  // namespace treesigma
