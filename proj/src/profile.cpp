#include "treesigma/profile.hpp"

#include <stdexcept>

namespace treesigma {

DegreeProfile::DegreeProfile(int order, int delta)
    : order_(order),
      delta_(delta),
      degree_counts_(static_cast<std::size_t>(delta) + 1, 0),
      pair_counts_(static_cast<std::size_t>(delta) * (delta + 1) / 2, 0) {
  if (order < 1 || delta < 0) throw std::invalid_argument("DegreeProfile: order must be >= 1 and delta >= 0");
}

std::size_t DegreeProfile::pair_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  // Row i (1-based) of the upper triangle starts after rows 1..i-1.
  const auto row = static_cast<std::size_t>(i - 1);
  return row * static_cast<std::size_t>(delta_) - row * (row - 1) / 2 + static_cast<std::size_t>(j - i);
}

std::int64_t DegreeProfile::degree_count(int i) const {
  if (i < 0 || i > delta_) return 0;
  return degree_counts_[static_cast<std::size_t>(i)];
}

std::int64_t DegreeProfile::pair_count(int i, int j) const {
  if (i < 1 || j < 1 || i > delta_ || j > delta_) return 0;
  return pair_counts_[pair_index(i, j)];
}

void DegreeProfile::add_vertex(int degree) {
  if (degree < 0 || degree > delta_) throw std::out_of_range("DegreeProfile: degree outside 0..delta");
  ++degree_counts_[static_cast<std::size_t>(degree)];
}

void DegreeProfile::add_edge(int deg_u, int deg_v) {
  if (deg_u < 1 || deg_v < 1 || deg_u > delta_ || deg_v > delta_) {
    throw std::out_of_range("DegreeProfile: edge endpoint degree outside 1..delta");
  }
  ++pair_counts_[pair_index(deg_u, deg_v)];
}

std::int64_t DegreeProfile::edge_count() const {
  std::int64_t total = 0;
  for (auto m : pair_counts_) total += m;
  return total;
}

std::int64_t DegreeProfile::sigma() const {
  std::int64_t total = 0;
  for (int i = 1; i <= delta_; ++i) {
    for (int j = i; j <= delta_; ++j) {
      const std::int64_t d = j - i;
      total += pair_count(i, j) * d * d;
    }
  }
  return total;
}

Rational DegreeProfile::weighted_edge_sum() const {
  Rational total;
  for (int i = 1; i <= delta_; ++i) {
    for (int j = i; j <= delta_; ++j) {
      const auto m = pair_count(i, j);
      if (m != 0) total += Rational(m) * (Rational(1, i) + Rational(1, j));
    }
  }
  return total;
}

std::vector<std::string> DegreeProfile::identity_violations() const {
  std::vector<std::string> out;
  const std::int64_t n = order_;

  std::int64_t vertices = 0;
  std::int64_t degree_sum = 0;
  for (int i = 0; i <= delta_; ++i) {
    vertices += degree_count(i);
    degree_sum += static_cast<std::int64_t>(i) * degree_count(i);
  }
  if (vertices != n) {
    out.push_back("sum of n_i is " + std::to_string(vertices) + ", expected n = " + std::to_string(n));
  }
  if (degree_sum != 2 * n - 2) {
    out.push_back("sum of i*n_i is " + std::to_string(degree_sum) + ", expected 2n-2 = " + std::to_string(2 * n - 2));
  }
  for (int i = 1; i <= delta_; ++i) {
    std::int64_t endpoints = 0;
    for (int j = 1; j <= delta_; ++j) endpoints += (j == i ? 2 : 1) * pair_count(i, j);
    if (endpoints != static_cast<std::int64_t>(i) * degree_count(i)) {
      out.push_back("handshake at degree " + std::to_string(i) + ": edge endpoints " + std::to_string(endpoints) +
                    " != i*n_i = " + std::to_string(static_cast<std::int64_t>(i) * degree_count(i)));
    }
  }
  if (edge_count() != n - 1) {
    out.push_back("sum of m_ij is " + std::to_string(edge_count()) + ", expected n-1 = " + std::to_string(n - 1));
  }
  // Each vertex of degree i >= 1 contributes i * (1/i) = 1; the single
  // isolated vertex of the order-1 tree contributes nothing.
  if (n >= 2 && weighted_edge_sum() != Rational(n)) {
    out.push_back("sum of (1/i+1/j) m_ij is " + weighted_edge_sum().to_string() + ", expected n = " +
                  std::to_string(n));
  }
  return out;
}

DegreeProfile profile(const Tree& t) {
  DegreeProfile p(t.order(), t.max_degree());
  for (Vertex v = 0; v < t.order(); ++v) p.add_vertex(t.degree(v));
  for (const auto& [u, v] : t.edges()) p.add_edge(t.degree(u), t.degree(v));
  return p;
}

}  // namespace treesigma
