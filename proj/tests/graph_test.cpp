#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "gradkit/generators.hpp"
#include "gradkit/graph.hpp"
#include "gradkit/io.hpp"
#include "gradkit/orientation.hpp"

using namespace gradkit;

namespace {

// Five vertices, arcs numbered 1..7 in this order (0-based here).
ArcListDigraph basics_digraph() {
  return build_digraph(5, {{0, 1, 1},
                           {0, 2, 1},
                           {2, 3, 1},
                           {1, 3, 1},
                           {3, 1, 1},
                           {1, 4, 1},
                           {4, 3, 1}});
}

} // namespace

TEST(BuildGraph, CollapsesAntiparallelDuplicates) {
  auto g = build_graph(3, {{0, 1}, {1, 0}, {1, 2}});
  EXPECT_EQ(g.size(), 2);
  EXPECT_EQ(g.edges(), (EdgeList{{0, 1}, {1, 2}}));
}

TEST(BuildGraph, BasicsDigraphIgnoringDirection) {
  auto g = build_graph(5, {{0, 1}, {0, 2}, {2, 3}, {1, 3}, {3, 1}, {1, 4}, {4, 3}});
  EXPECT_EQ(g.size(), 6);
}

TEST(BuildGraph, Empty) {
  EXPECT_EQ(build_graph(1, {}).size(), 0);
  EXPECT_EQ(build_graph(0, {}).order(), 0);
}

TEST(BuildGraph, DropsLoopsAndRejectsRange) {
  EXPECT_EQ(build_graph(2, {{0, 0}, {0, 1}}).size(), 1);
  EXPECT_THROW(build_graph(2, {{0, 2}}), InputError);
  EXPECT_THROW(build_graph(2, {{-1, 1}}), InputError);
}

TEST(BuildGraph, Idempotent) {
  auto g = random_regular(40, 3, 5);
  EXPECT_EQ(build_graph(g.order(), g.edges()), g);
}

TEST(BuildGraph, AdjacencySymmetricAndSorted) {
  auto g = random_regular(30, 4, 2);
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    for (Vertex w : nb)
      EXPECT_TRUE(g.adjacent(w, v));
  }
}

TEST(BuildDigraph, BasicsInLists) {
  auto d = basics_digraph();
  EXPECT_EQ(d.arc_count(), 7);
  EXPECT_EQ(d.indegree(0), 0);
  auto d2 = d.in_arcs(1);
  ASSERT_EQ(d2.size(), 2u);
  EXPECT_EQ(d2[0].source, 0);
  EXPECT_EQ(d2[0].id, 1);
  EXPECT_EQ(d2[1].source, 3);
  EXPECT_EQ(d2[1].id, 5);
  auto d4 = d.in_arcs(3);
  ASSERT_EQ(d4.size(), 3u);
  EXPECT_EQ(d4[0].source, 2);
  EXPECT_EQ(d4[0].id, 3);
  EXPECT_EQ(d4[1].source, 1);
  EXPECT_EQ(d4[1].id, 4);
  EXPECT_EQ(d4[2].source, 4);
  EXPECT_EQ(d4[2].id, 7);
  EXPECT_EQ(d.max_indegree(), 3);
}

TEST(BuildDigraph, DuplicateKeepsMinimumWeight) {
  auto d = build_digraph(2, {{0, 1, 3}, {0, 1, 1}});
  EXPECT_EQ(d.arc_count(), 1);
  EXPECT_EQ(has_arc(d, 0, 1), 1);
}

TEST(BuildDigraph, EmptyAndLoops) {
  auto d = build_digraph(3, {});
  for (Vertex v = 0; v < 3; ++v)
    EXPECT_EQ(d.indegree(v), 0);
  EXPECT_THROW(build_digraph(2, {{1, 1, 1}}), InputError);
}

TEST(HasArc, Basics) {
  auto d = basics_digraph();
  EXPECT_TRUE(has_arc(d, 0, 1));
  EXPECT_FALSE(has_arc(d, 1, 0));
  for (Vertex v = 0; v < 5; ++v)
    EXPECT_FALSE(has_arc(d, v, v));
}

TEST(HasArc, AgreesWithInListsExhaustively) {
  std::mt19937 rng(11);
  const int n = 50;
  std::vector<Arc> arcs;
  for (int i = 0; i < 300; ++i) {
    int a = rng() % n, b = rng() % n;
    if (a != b)
      arcs.push_back({a, b, static_cast<int>(rng() % 5)});
  }
  auto d = build_digraph(n, arcs);
  std::vector<std::vector<char>> in(n, std::vector<char>(n, 0));
  for (const auto &a : arcs)
    in[a.from][a.to] = 1;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      EXPECT_EQ(has_arc(d, x, y).has_value(), in[x][y] == 1);
}

TEST(Underlying, MergesAntiparallel) {
  EXPECT_EQ(underlying_graph(basics_digraph()).size(), 6);
  EXPECT_EQ(underlying_graph(build_digraph(2, {{0, 1, 1}, {1, 0, 1}})).size(), 1);
  EXPECT_EQ(underlying_graph(build_digraph(4, {})).size(), 0);
}

TEST(Underlying, RoundTripThroughOrientation) {
  for (auto g : {grid(7, 9), random_regular(60, 3, 1), complete_graph(8),
                 subdivided_clique(5, 2)})
    EXPECT_EQ(underlying_graph(orient(g).digraph), g);
}

TEST(Components, CountsAndSets) {
  auto g = build_graph(6, {{0, 1}, {2, 3}, {3, 4}});
  auto c = connected_components(g);
  EXPECT_EQ(c.count, 3);
  EXPECT_EQ(component_vertex_sets(g),
            (std::vector<std::vector<Vertex>>{{0, 1}, {2, 3, 4}, {5}}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(build_graph(0, {})));
}

TEST(InducedSubgraph, KeepsOriginalIds) {
  auto g = cycle_graph(6);
  auto s = induced_subgraph(g, std::vector<Vertex>{0, 1, 2, 4});
  EXPECT_EQ(s.graph.order(), 4);
  EXPECT_EQ(s.graph.size(), 2);
  EXPECT_EQ(s.original, (std::vector<Vertex>{0, 1, 2, 4}));
}

TEST(Io, ReadWriteRoundTrip) {
  std::istringstream in("# comment\n\n3 3\n1 2\n2 1\n2 3\n");
  auto g = read_graph(in);
  EXPECT_EQ(g.size(), 2);
  std::ostringstream out;
  write_graph(out, g);
  EXPECT_EQ(out.str(), "3 2\n1 2\n2 3\n");
}

TEST(Io, MalformedLineNamesLine) {
  std::istringstream in("4 3\n1 2\n2 3\n3 x\n");
  try {
    read_graph(in);
    FAIL();
  } catch (const InputError &e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }
}

TEST(Io, RangeAndCountErrors) {
  std::istringstream a("3 1\n1 4\n"), b("3 2\n1 2\n"), c("3 1\n1 2\n2 3\n"),
      d("3 1\n2 2\n");
  EXPECT_THROW(read_graph(a), InputError);
  EXPECT_THROW(read_graph(b), InputError);
  EXPECT_THROW(read_graph(c), InputError);
  EXPECT_THROW(read_graph(d), InputError);
}

TEST(Io, DigraphRoundTrip) {
  std::istringstream in("3 3\n1 2 4\n1 2 2\n3 1 1\n");
  auto d = read_digraph(in);
  std::ostringstream out;
  write_digraph(out, d);
  EXPECT_EQ(out.str(), "3 2\n1 2 2\n3 1 1\n");
  std::istringstream bad("2 1\n1 2\n");
  EXPECT_THROW(read_digraph(bad), InputError);
}
