#include <gtest/gtest.h>

#include "gradkit/coloring.hpp"
#include "gradkit/generators.hpp"
#include "gradkit/harness.hpp"

using namespace gradkit;

namespace {

// c(i) = number of trailing zeros of i (1-based) plus one, reversed so the
// middle vertex gets the smallest color.
Coloring ruler(int n, int bits) {
  std::vector<int> c;
  for (int i = 1; i <= n; ++i)
    c.push_back(bits - std::countr_zero(static_cast<unsigned>(i)));
  return make_coloring(c);
}

} // namespace

TEST(Centered, P3AndK2) {
  EXPECT_TRUE(is_centered(path_graph(3), make_coloring({1, 2, 1})));
  EXPECT_FALSE(is_centered(complete_graph(2), make_coloring({1, 1})));
  EXPECT_TRUE(is_centered(grid(3, 3), make_coloring({1, 2, 3, 4, 5, 6, 7, 8, 9})));
}

TEST(Centered, ConnectedSetEnumerationCount) {
  // P3 has 6 connected subgraphs, K4 has 15.
  int count = 0;
  detail::for_each_connected_set(path_graph(3), [&](std::uint64_t) {
    ++count;
    return true;
  });
  EXPECT_EQ(count, 6);
  count = 0;
  detail::for_each_connected_set(complete_graph(4), [&](std::uint64_t) {
    ++count;
    return true;
  });
  EXPECT_EQ(count, 15);
  count = 0;
  detail::for_each_connected_set(cycle_graph(5), [&](std::uint64_t) {
    ++count;
    return true;
  });
  EXPECT_EQ(count, 21);
}

TEST(Centered, Thresholds) {
  auto c4 = cycle_graph(4);
  auto two = make_coloring({1, 2, 1, 2});
  EXPECT_TRUE(is_p_centered(c4, two, 1));
  EXPECT_TRUE(is_p_centered(c4, two, 2));
  EXPECT_FALSE(is_p_centered(c4, two, 3));
  auto p7 = path_graph(7);
  auto r = ruler(7, 3);
  ASSERT_TRUE(is_centered(p7, r));
  for (int p = 1; p <= 5; ++p)
    EXPECT_TRUE(is_p_centered(p7, r, p));
}

TEST(Centered, LimitsAndShape) {
  EXPECT_THROW(is_centered(path_graph(21), ruler(21, 5)), OracleLimitError);
  EXPECT_THROW(is_centered(path_graph(3), make_coloring({1, 2})), DomainError);
  EXPECT_THROW(make_coloring({0, 1}), DomainError);
  EXPECT_THROW(is_p_centered(path_graph(2), make_coloring({1, 2}), 0),
               DomainError);
}

TEST(CenteredToForest, P3) {
  auto f = centered_to_forest(path_graph(3), make_coloring({1, 2, 1}));
  EXPECT_EQ(f.parents(), (std::vector<Vertex>{1, -1, 1}));
  EXPECT_EQ(f.height(), 2);
}

TEST(CenteredToForest, SingleVertex) {
  auto f = centered_to_forest(path_graph(1), make_coloring({1}));
  EXPECT_EQ(f.height(), 1);
  EXPECT_EQ(f.roots(), (std::vector<Vertex>{0}));
}

TEST(CenteredToForest, RulerColoringOfP7) {
  auto g = path_graph(7);
  auto f = centered_to_forest(g, ruler(7, 3));
  EXPECT_EQ(f.height(), 3);
  EXPECT_EQ(f.roots(), (std::vector<Vertex>{3}));
  EXPECT_TRUE(closure_contains(g, f));
  auto t = forest_to_decomposition(f);
  EXPECT_EQ(t.width(), 2);
  EXPECT_TRUE(is_valid_decomposition(g, t));
}

TEST(CenteredToForest, RejectsNonCentered) {
  EXPECT_THROW(centered_to_forest(complete_graph(2), make_coloring({1, 1})),
               NotCenteredError);
  // Unverified run still fails when a component has no unique color.
  EXPECT_THROW(centered_to_forest(cycle_graph(4), make_coloring({1, 2, 1, 2}),
                                  false),
               NotCenteredError);
}

TEST(CenteredToForest, HeightAtMostColorsPerComponent) {
  for (const auto &e : small_corpus(14)) {
    std::vector<int> c(e.graph.order());
    for (int v = 0; v < e.graph.order(); ++v)
      c[v] = v + 1;
    auto col = make_coloring(c);
    auto f = centered_to_forest(e.graph, col);
    EXPECT_TRUE(closure_contains(e.graph, f));
    EXPECT_LE(f.height(), col.used());
  }
}

TEST(LowTdepthColoring, Edgeless) {
  auto c = low_tdepth_coloring(empty_graph(6), 2);
  EXPECT_EQ(c.used(), 1);
}

TEST(LowTdepthColoring, P7) {
  auto g = path_graph(7);
  auto c = low_tdepth_coloring(g, 3);
  EXPECT_GE(c.used(), 3);
  EXPECT_TRUE(is_p_centered(g, c, 3));
  // Some color occurs once, and that vertex is a cut vertex of the path.
  std::vector<int> count(c.palette + 1, 0);
  for (int x : c.color)
    ++count[x];
  bool split = false;
  for (Vertex v = 1; v + 1 < 7; ++v)
    split = split || count[c.color[v]] == 1;
  EXPECT_TRUE(split);
}

TEST(LowTdepthColoring, CliqueIsRainbow) {
  for (int p = 1; p <= 4; ++p)
    EXPECT_EQ(low_tdepth_coloring(complete_graph(5), p).used(), 5);
}

TEST(LowTdepthColoring, CertifiedOnCorpus) {
  for (const auto &e : small_corpus(20))
    for (int p = 1; p <= 4; ++p) {
      auto c = low_tdepth_coloring(e.graph, p);
      EXPECT_TRUE(detail::classes_have_low_treedepth(e.graph, c, p))
          << e.spec.str() << " p=" << p;
      if (e.graph.order() <= 20) {
        EXPECT_TRUE(is_p_centered(e.graph, c, p)) << e.spec.str();
      }
    }
}

TEST(LowTdepthColoring, LargerGraphsUseClassCertification) {
  for (auto g : {grid(8, 8), random_regular(60, 3, 5)}) {
    auto r = low_tdepth_coloring_traced(g, 3);
    EXPECT_TRUE(detail::classes_have_low_treedepth(g, r.coloring, 3));
    EXPECT_FALSE(r.fallback);
  }
}

TEST(LowTdepthColoring, Deterministic) {
  auto g = grid(5, 6);
  EXPECT_EQ(low_tdepth_coloring(g, 3).color, low_tdepth_coloring(g, 3).color);
}
