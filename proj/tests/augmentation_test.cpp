#include <gtest/gtest.h>

#include <algorithm>

#include "gradkit/augmentation.hpp"
#include "gradkit/generators.hpp"
#include "gradkit/grad.hpp"
#include "gradkit/harness.hpp"

using namespace gradkit;

namespace {

std::vector<Arc> sorted(std::vector<Arc> a) {
  std::sort(a.begin(), a.end(), [](const Arc &x, const Arc &y) {
    return std::tie(x.from, x.to, x.weight) < std::tie(y.from, y.to, y.weight);
  });
  return a;
}

} // namespace

TEST(Transitivity, TwoArcPath) {
  auto d = build_digraph(3, {{0, 1, 1}, {1, 2, 1}});
  EXPECT_EQ(transitivity_arcs(d), (std::vector<Arc>{{0, 2, 2}}));
}

TEST(Transitivity, NoLoops) {
  auto d = build_digraph(2, {{0, 1, 1}, {1, 0, 1}});
  EXPECT_TRUE(transitivity_arcs(d).empty());
}

TEST(Transitivity, WeightedChain) {
  auto d = build_digraph(4, {{0, 1, 2}, {1, 2, 3}, {2, 3, 1}});
  EXPECT_EQ(sorted(transitivity_arcs(d)),
            (std::vector<Arc>{{0, 2, 5}, {1, 3, 4}}));
}

TEST(Fraternity, CommonHead) {
  auto d = build_digraph(3, {{0, 2, 1}, {1, 2, 1}});
  EXPECT_EQ(fraternity_edges(d), (std::vector<Arc>{{0, 1, 2}}));
}

TEST(Fraternity, SingleInArcs) {
  auto d = build_digraph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  EXPECT_TRUE(fraternity_edges(d).empty());
}

TEST(Fraternity, TwoHeadsTwoWeights) {
  auto d = build_digraph(4, {{0, 2, 1}, {1, 2, 4}, {0, 3, 2}, {1, 3, 1}});
  EXPECT_EQ(sorted(fraternity_edges(d)),
            (std::vector<Arc>{{0, 1, 3}, {0, 1, 5}}));
  auto h = augment_step(d);
  auto w01 = has_arc(h, 0, 1), w10 = has_arc(h, 1, 0);
  EXPECT_NE(w01.has_value(), w10.has_value());
  EXPECT_EQ(w01.value_or(0) + w10.value_or(0), 3);
}

TEST(AugmentStep, DirectedPath) {
  auto d = build_digraph(3, {{0, 1, 1}, {1, 2, 1}});
  auto h = augment_step_traced(d);
  EXPECT_EQ(has_arc(h.digraph, 0, 2), 2);
  EXPECT_EQ(h.digraph.arc_count(), 3);
  EXPECT_EQ(h.counters.fraternity_added, 0);
  EXPECT_EQ(h.counters.transitivity_added, 1);
}

TEST(AugmentStep, FraternityPair) {
  auto d = build_digraph(3, {{0, 2, 1}, {1, 2, 1}});
  auto h = augment_step(d);
  EXPECT_TRUE(has_arc(h, 0, 2));
  EXPECT_TRUE(has_arc(h, 1, 2));
  auto a = has_arc(h, 0, 1), b = has_arc(h, 1, 0);
  EXPECT_NE(a.has_value(), b.has_value());
  EXPECT_EQ(a.value_or(0) + b.value_or(0), 2);
}

TEST(AugmentStep, Arcless) {
  auto d = build_digraph(4, {});
  EXPECT_EQ(augment_step(d).arc_count(), 0);
}

TEST(AugmentStep, FraternityAlreadyJoinedOnlyLowersWeight) {
  // 0 -> 1 with weight 5 and a common head 2 giving {0,1} weight 2.
  auto d = build_digraph(3, {{0, 1, 5}, {0, 2, 1}, {1, 2, 1}});
  auto h = augment_step(d);
  EXPECT_EQ(has_arc(h, 0, 1), 2);
  EXPECT_FALSE(has_arc(h, 1, 0));
}

TEST(Augment, P4TwoSteps) {
  auto g = path_graph(4);
  auto t = augment(g, 2);
  ASSERT_EQ(t.steps.size(), 2u);
  auto u = underlying_graph(t.steps[1]);
  auto dist = bfs_all_pairs(g);
  for (Vertex x = 0; x < 4; ++x)
    for (Vertex y = x + 1; y < 4; ++y)
      if (dist[x][y] <= 2) {
        EXPECT_TRUE(u.adjacent(x, y)) << x << " " << y;
      }
}

TEST(Augment, EdgelessStaysArcless) {
  auto t = augment(empty_graph(6), 4);
  for (const auto &s : t.steps)
    EXPECT_EQ(s.arc_count(), 0);
}

TEST(Augment, C4OneStepIsK4) {
  auto t = augment(cycle_graph(4), 2);
  EXPECT_EQ(underlying_graph(t.steps[1]), complete_graph(4));
}

TEST(Augment, FirstStepIsOrientation) {
  auto g = grid(5, 5);
  auto t = augment(g, 1);
  EXPECT_EQ(t.steps[0].sorted_arcs(), orient(g).digraph.sorted_arcs());
  EXPECT_THROW(augment(g, 0), DomainError);
}

TEST(Augment, ClosureInclusionAndWeights) {
  for (const auto &e : small_corpus(12)) {
    auto t = augment(e.graph, 4);
    auto dist = bfs_all_pairs(e.graph);
    for (std::size_t i = 0; i + 1 < t.steps.size(); ++i)
      EXPECT_EQ(closure_violations(t.steps[i], t.steps[i + 1]), 0)
          << e.spec.str() << " step " << i + 1;
    for (const auto &s : t.steps)
      for (const auto &a : s.arcs())
        EXPECT_GE(a.weight, dist[a.from][a.to]) << e.spec.str();
  }
}

TEST(Augment, IndegreeRecurrenceOnOracleGraphs) {
  for (const auto &e : small_corpus(10)) {
    auto t = augment(e.graph, 3);
    for (std::size_t i = 0; i + 1 < t.steps.size(); ++i) {
      const long long md = t.steps[i].max_indegree();
      const auto next = underlying_graph(t.steps[i + 1]);
      const long long grad0 = (grad(next, 0).value * 2).floor();
      EXPECT_LE(t.steps[i + 1].max_indegree(), md * md + md + grad0)
          << e.spec.str();
    }
  }
}

TEST(Augment, CountersMatchDigraphs) {
  auto t = augment(random_regular(80, 3, 4), 4);
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    EXPECT_EQ(t.counters[i].arcs, t.steps[i].arc_count());
    EXPECT_EQ(t.counters[i].max_indegree, t.steps[i].max_indegree());
  }
}

TEST(Augment, Deterministic) {
  auto g = random_regular(120, 4, 8);
  auto a = augment(g, 3), b = augment(g, 3);
  EXPECT_EQ(a.steps.back().sorted_arcs(), b.steps.back().sorted_arcs());
}

TEST(Augment, WeightCap) {
  auto t = augment(path_graph(12), 4, AugmentOptions{3, std::nullopt});
  for (const auto &a : t.steps.back().arcs())
    EXPECT_LE(a.weight, 3);
}
