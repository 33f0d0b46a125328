#include "treesigma/tree.hpp"

#include <random>

#include "gtest/gtest.h"
#include "support/random_trees.hpp"
#include "treesigma/errors.hpp"

namespace treesigma {
namespace {

Tree path(int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return Tree::from_edges(n, e);
}

Tree star(int leaves) {
  std::vector<Edge> e;
  for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Tree::from_edges(leaves + 1, e);
}

TEST(TreeTest, SingleVertex) {
  const Tree t;
  EXPECT_EQ(t.order(), 1);
  EXPECT_EQ(t.max_degree(), 0);
  EXPECT_TRUE(t.edges().empty());
  EXPECT_EQ(sigma(t), 0);
}

TEST(TreeTest, SigmaOfSmallTrees) {
  EXPECT_EQ(sigma(path(2)), 0);
  EXPECT_EQ(sigma(path(9)), 2);  // two (1,2) end edges
  EXPECT_EQ(sigma(star(4)), 36);  // 4 * (4-1)^2
}

TEST(TreeTest, AdjacencyIsSortedAndSymmetric) {
  const std::vector<Edge> e{{3, 0}, {0, 1}, {2, 0}};
  const Tree t = Tree::from_edges(4, e);
  ASSERT_EQ(t.neighbors(0).size(), 3u);
  EXPECT_EQ(t.neighbors(0)[0], 1);
  EXPECT_EQ(t.neighbors(0)[2], 3);
  for (Vertex u = 0; u < t.order(); ++u) {
    for (Vertex v : t.neighbors(u)) {
      const auto back = t.neighbors(v);
      EXPECT_NE(std::find(back.begin(), back.end(), u), back.end());
    }
  }
}

TEST(TreeTest, RejectsWrongEdgeCount) {
  const std::vector<Edge> cycle{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  try {
    (void)Tree::from_edges(4, cycle);
    FAIL() << "cycle accepted";
  } catch (const StructuralError& e) {
    EXPECT_NE(std::string(e.what()).find("graph has 4 edges, expected n-1"), std::string::npos);
  }
}

TEST(TreeTest, RejectsDisconnectedGraph) {
  // Triangle plus an isolated vertex: n-1 edges, but not connected.
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}};
  EXPECT_THROW((void)Tree::from_edges(4, e), StructuralError);
}

TEST(TreeTest, RejectsLoopsDuplicatesAndBadIds) {
  const std::vector<Edge> loop{{0, 0}, {0, 1}};
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  const std::vector<Edge> out_of_range{{0, 1}, {1, 5}};
  EXPECT_THROW((void)Tree::from_edges(3, loop), StructuralError);
  EXPECT_THROW((void)Tree::from_edges(3, dup), StructuralError);
  EXPECT_THROW((void)Tree::from_edges(3, out_of_range), StructuralError);
  EXPECT_THROW((void)Tree::from_edges(0, {}), StructuralError);
}

TEST(TreeTest, FromParentsMatchesEdges) {
  const std::vector<int> parent{-1, 0, 1, 1};
  const Tree t = Tree::from_parents(parent);
  EXPECT_EQ(t.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}}));
}

TEST(TreeTest, SigmaInvariantUnderRelabeling) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const Tree t = testing::random_tree(2 + k % 40, rng);
    const Tree r = t.relabeled(testing::random_permutation(t.order(), rng));
    EXPECT_EQ(sigma(t), sigma(r));
    EXPECT_EQ(t.max_degree(), r.max_degree());
  }
}

}  // namespace
}  // namespace treesigma
