#include "treesigma/constructions.hpp"

#include <string>

#include "treesigma/errors.hpp"

namespace treesigma {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

// Path vertex v_idx (1-based) is vertex idx-1; pendants follow.
std::vector<Edge> tt1_edges(int k, int delta, int& next_vertex) {
  const int path_len = 2 * k + 1;
  std::vector<Edge> edges;
  for (int v = 1; v < path_len; ++v) edges.emplace_back(v - 1, v);
  next_vertex = path_len;
  for (int idx = 2; idx <= 2 * k; idx += 2) {
    for (int p = 0; p < delta - 2; ++p) edges.emplace_back(idx - 1, next_vertex++);
  }
  return edges;
}

}  // namespace

Tree tt1_opt(int k, int delta) {
  require(k >= 1, "tt1_opt requires k >= 1, got " + std::to_string(k));
  require(delta >= 4, "tt1_opt requires delta >= 4, got " + std::to_string(delta));
  int order = 0;
  auto edges = tt1_edges(k, delta, order);
  return Tree::from_edges(order, edges);
}

Tree tt0_opt(int k, int delta, int position) {
  require(delta >= 4, "tt0_opt requires delta >= 4, got " + std::to_string(delta));
  require(k >= 2, "tt0_opt family empty for k=1 (no odd position in [3, 2k-1]); got k = " + std::to_string(k));
  require(position % 2 != 0 && position >= 3 && position <= 2 * k - 1,
          "tt0_opt position must be odd in [3, " + std::to_string(2 * k - 1) + "], got " + std::to_string(position));
  int next = 0;
  auto edges = tt1_edges(k, delta, next);
  // Edge v_pos v_{pos+1} is the path edge at index pos-1 (vertices pos-1, pos).
  const Vertex left = position - 1;
  const Vertex right = position;
  const Vertex middle = next++;
  edges[static_cast<std::size_t>(position - 1)] = {left, middle};
  edges.emplace_back(middle, right);
  for (int p = 0; p < delta - 2; ++p) edges.emplace_back(middle, next++);
  return Tree::from_edges(next, edges);
}

std::vector<int> tt0_positions(int k) {
  std::vector<int> out;
  for (int pos = 3; pos <= 2 * k - 1; pos += 2) out.push_back(pos);
  return out;
}

}  // namespace treesigma
