#include <gtest/gtest.h>

#include "gradkit/forest.hpp"
#include "gradkit/generators.hpp"

using namespace gradkit;

TEST(RootedForest, HeightsAndAncestors) {
  // 0 - 1 - {2, 3}, separate root 4
  RootedForest f({-1, 0, 1, 1, -1});
  EXPECT_EQ(f.heights(), (std::vector<int>{1, 2, 3, 3, 1}));
  EXPECT_EQ(f.height(), 3);
  EXPECT_EQ(f.roots(), (std::vector<Vertex>{0, 4}));
  EXPECT_TRUE(f.is_ancestor(0, 3));
  EXPECT_TRUE(f.is_ancestor(3, 3));
  EXPECT_FALSE(f.is_ancestor(2, 3));
  EXPECT_FALSE(f.is_ancestor(4, 0));
  EXPECT_EQ(f.root_path(3), (std::vector<Vertex>{0, 1, 3}));
}

TEST(RootedForest, RejectsCyclesAndBadParents) {
  EXPECT_THROW(RootedForest({1, 0}), DomainError);
  EXPECT_THROW(RootedForest({1, 2, 1}), DomainError);
  EXPECT_THROW(RootedForest({0}), DomainError);
  EXPECT_THROW(RootedForest({5, -1}), DomainError);
  EXPECT_NO_THROW(RootedForest(std::vector<Vertex>{}));
}

TEST(Closure, OfChainIsClique) {
  RootedForest f({-1, 0, 1, 2});
  EXPECT_EQ(closure(f), complete_graph(4));
}

TEST(Closure, Violation) {
  RootedForest f({-1, 0, 0});
  EXPECT_TRUE(closure_contains(path_graph(3), RootedForest({1, -1, 1})));
  auto v = closure_violation(build_graph(3, {{1, 2}}), f);
  ASSERT_TRUE(v);
  EXPECT_EQ(*v, (Edge{1, 2}));
}

TEST(DfsForest, ContainsGraphInClosure) {
  for (auto g : {grid(6, 7), random_regular(40, 3, 2), subdivided_clique(5, 2),
                 build_graph(5, {{0, 1}, {3, 4}})}) {
    auto f = dfs_forest(g);
    EXPECT_TRUE(closure_contains(g, f));
  }
  EXPECT_EQ(dfs_forest(path_graph(9)).height(), 9);
  EXPECT_EQ(dfs_forest(star_graph(5)).height(), 2);
}

TEST(Decomposition, StarForestWidthOne) {
  RootedForest f({-1, 0, 0, 0});
  auto t = forest_to_decomposition(f);
  EXPECT_EQ(t.width(), 1);
  EXPECT_TRUE(is_valid_decomposition(closure(f), t));
}

TEST(Decomposition, SingleVertexAndEmpty) {
  EXPECT_EQ(forest_to_decomposition(RootedForest({-1})).width(), 0);
  auto empty = forest_to_decomposition(RootedForest(std::vector<Vertex>{}));
  EXPECT_EQ(empty.width(), -1);
  EXPECT_TRUE(is_valid_decomposition(build_graph(0, {}), empty));
}

TEST(Decomposition, BagsAreRootPaths) {
  RootedForest f({-1, 0, 1, 1, -1, 4});
  auto t = forest_to_decomposition(f);
  for (Vertex v = 0; v < f.order(); ++v)
    EXPECT_EQ(t.bags[v], f.root_path(v));
  EXPECT_EQ(t.width(), f.height() - 1);
  EXPECT_TRUE(is_valid_decomposition(closure(f), t));
}

TEST(Decomposition, ErrorsAreReported) {
  auto g = path_graph(3);
  TreeDecomposition missing{{{0, 1}, {1}}, {{0, 1}}};
  EXPECT_TRUE(decomposition_error(g, missing));
  TreeDecomposition edge_lost{{{0, 1}, {2}}, {{0, 1}}};
  EXPECT_TRUE(decomposition_error(g, edge_lost));
  TreeDecomposition broken{{{0, 1}, {1, 2}, {0}}, {{0, 1}, {1, 2}}};
  auto e = decomposition_error(g, broken);
  ASSERT_TRUE(e);
  EXPECT_NE(e->find("subtree"), std::string::npos);
  TreeDecomposition not_tree{{{0, 1}, {1, 2}}, {}};
  EXPECT_TRUE(decomposition_error(g, not_tree));
  TreeDecomposition ok{{{0, 1}, {1, 2}}, {{0, 1}}};
  EXPECT_FALSE(decomposition_error(g, ok));
}
