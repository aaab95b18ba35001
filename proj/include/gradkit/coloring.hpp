#pragma once

// Centered and p-centered colorings.
//
// A coloring is p-centered when every connected subgraph has a color that
// occurs exactly once or shows at least p colors. Any i < p color classes of
// such a coloring therefore induce a subgraph of tree-depth at most i.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "gradkit/augmentation.hpp"
#include "gradkit/error.hpp"
#include "gradkit/forest.hpp"
#include "gradkit/graph.hpp"
#include "gradkit/orientation.hpp"
#include "gradkit/treedepth.hpp"

namespace gradkit {

struct Coloring {
  std::vector<int> color; // color[v] in 1..palette
  int palette = 0;

  int order() const { return static_cast<int>(color.size()); }
  // Number of distinct colors actually used.
  int used() const {
    std::vector<char> seen(static_cast<std::size_t>(palette) + 1, 0);
    int k = 0;
    for (int c : color)
      if (!seen[c]) {
        seen[c] = 1;
        ++k;
      }
    return k;
  }
};

inline Coloring make_coloring(std::vector<int> color) {
  Coloring c;
  for (std::size_t v = 0; v < color.size(); ++v) {
    if (color[v] < 1)
      throw DomainError("color of vertex " + std::to_string(v + 1) +
                        " must be at least 1");
    c.palette = std::max(c.palette, color[v]);
  }
  c.color = std::move(color);
  return c;
}

namespace detail {

inline void check_coloring(const Graph &g, const Coloring &c, int limit) {
  if (c.order() != g.order())
    throw DomainError("coloring has " + std::to_string(c.order()) +
                      " entries for a graph of order " +
                      std::to_string(g.order()));
  if (g.order() > limit || g.order() > 63)
    throw OracleLimitError("centered-coloring check limit exceeded: n = " +
                           std::to_string(g.order()) + " > " +
                           std::to_string(std::min(limit, 63)));
}

// Calls visit(mask) for every nonempty vertex set inducing a connected
// subgraph, each exactly once. Stops when visit returns false.
template <class Visit>
bool for_each_connected_set(const Graph &g, Visit &&visit) {
  using Mask = std::uint64_t;
  const int n = g.order();
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (const auto &[u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  // Sets with minimum vertex s, grown from s by choosing which frontier
  // vertices join; `banned` holds vertices already decided against.
  struct Frame {
    Mask set, frontier, banned;
  };
  std::vector<Frame> stack;
  for (Vertex s = 0; s < n; ++s) {
    Mask below = (Mask{1} << s) - 1;
    stack.push_back({Mask{1} << s, adj[s] & ~below & ~(Mask{1} << s), below});
    while (!stack.empty()) {
      Frame f = stack.back();
      stack.pop_back();
      if (!f.frontier) {
        if (!visit(f.set))
          return false;
        continue;
      }
      Vertex v = std::countr_zero(f.frontier);
      Mask bit = Mask{1} << v;
      // v excluded
      stack.push_back({f.set, f.frontier & ~bit, f.banned | bit});
      // v included
      Mask set = f.set | bit;
      stack.push_back(
          {set, (f.frontier | adj[v]) & ~set & ~f.banned & ~bit, f.banned});
    }
  }
  return true;
}

inline bool centered_with_threshold(const Graph &g, const Coloring &c,
                                    int p) {
  std::vector<int> count(static_cast<std::size_t>(c.palette) + 1, 0);
  return for_each_connected_set(g, [&](std::uint64_t set) {
    std::fill(count.begin(), count.end(), 0);
    int distinct = 0;
    for (auto r = set; r; r &= r - 1)
      if (count[c.color[std::countr_zero(r)]]++ == 0)
        ++distinct;
    if (p > 0 && distinct >= p)
      return true;
    for (int x : count)
      if (x == 1)
        return true;
    return false;
  });
}

} // namespace detail

inline bool is_centered(const Graph &g, const Coloring &c, int limit = 20) {
  detail::check_coloring(g, c, limit);
  return detail::centered_with_threshold(g, c, 0);
}

inline bool is_p_centered(const Graph &g, const Coloring &c, int p,
                          int limit = 20) {
  detail::check_coloring(g, c, limit);
  if (p < 1)
    throw DomainError("is_p_centered: p must be at least 1");
  return detail::centered_with_threshold(g, c, p);
}

// Elimination forest of a centered coloring: in each component the root is
// the vertex of the smallest color occurring exactly once, then recurse on
// the component minus the root. With `verify`, inputs within `limit` are
// checked to be centered first.
inline RootedForest centered_to_forest(const Graph &g, const Coloring &c,
                                       bool verify = true, int limit = 20) {
  if (c.order() != g.order())
    throw DomainError("coloring does not match the graph order");
  if (verify && g.order() <= limit && !is_centered(g, c, limit))
    throw NotCenteredError("coloring is not centered");
  const int n = g.order();
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  // live[v] == current task stamp while v belongs to the task's component
  std::vector<int> live(static_cast<std::size_t>(n), 0);
  std::vector<int> count(static_cast<std::size_t>(c.palette) + 1, 0);

  struct Task {
    std::vector<Vertex> members;
    Vertex above;
  };
  std::vector<Task> tasks;
  for (auto &comp : component_vertex_sets(g))
    tasks.push_back({std::move(comp), -1});
  int stamp = 0;
  std::vector<Vertex> queue;
  while (!tasks.empty()) {
    Task t = std::move(tasks.back());
    tasks.pop_back();
    for (Vertex v : t.members)
      ++count[c.color[v]];
    Vertex root = -1;
    for (Vertex v : t.members)
      if (count[c.color[v]] == 1 &&
          (root < 0 || c.color[v] < c.color[root] ||
           (c.color[v] == c.color[root] && v < root)))
        root = v;
    for (Vertex v : t.members)
      --count[c.color[v]];
    if (root < 0)
      throw NotCenteredError("no color occurs exactly once in the component "
                             "containing vertex " +
                             std::to_string(t.members.front() + 1));
    parent[root] = t.above;
    const int inside = ++stamp;
    for (Vertex v : t.members)
      live[v] = inside;
    live[root] = 0;
    for (Vertex s : t.members) {
      if (live[s] != inside)
        continue;
      const int done = ++stamp;
      queue.assign(1, s);
      live[s] = done;
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (Vertex w : g.neighbors(queue[i]))
          if (live[w] == inside) {
            live[w] = done;
            queue.push_back(w);
          }
      std::sort(queue.begin(), queue.end());
      tasks.push_back({queue, root});
    }
  }
  return RootedForest(std::move(parent));
}

// Greedy coloring of the augmented graph, certified; see low_tdepth_coloring.
struct ColoringOptions {
  int certify_limit = 20; // full p-centered check up to this order
  int max_steps = 64;     // augmentation steps before the fallback
};

struct ColoringReport {
  Coloring coloring;
  int steps = 0;         // augmentation depth of the accepted coloring
  bool fallback = false; // all-distinct colors were used
};

namespace detail {

inline Coloring greedy_reverse_degeneracy(const Graph &u) {
  auto order = orient(u).order.order;
  std::vector<int> color(static_cast<std::size_t>(u.order()), 0);
  std::vector<int> used(static_cast<std::size_t>(u.order()) + 2, -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    for (Vertex w : u.neighbors(v))
      if (color[w])
        used[color[w]] = v;
    int c = 1;
    while (used[c] == v)
      ++c;
    color[v] = c;
  }
  return make_coloring(std::move(color));
}

// Every union of i <= p - 1 color classes induces tree-depth <= i.
inline bool classes_have_low_treedepth(const Graph &g, const Coloring &c,
                                       int p) {
  const int k = c.palette;
  std::vector<std::vector<Vertex>> cls(static_cast<std::size_t>(k) + 1);
  for (Vertex v = 0; v < g.order(); ++v)
    cls[c.color[v]].push_back(v);
  std::vector<int> pick;
  std::vector<Vertex> vertices;
  // Subsets of colors in lexicographic order, size 1 .. p-1.
  auto rec = [&](auto &&self, int next) -> bool {
    if (!pick.empty()) {
      vertices.clear();
      for (int x : pick)
        vertices.insert(vertices.end(), cls[x].begin(), cls[x].end());
      std::sort(vertices.begin(), vertices.end());
      auto sub = induced_subgraph(g, vertices);
      if (sub.graph.order() > 0 &&
          !treedepth_decide(sub.graph, static_cast<int>(pick.size())))
        return false;
    }
    if (static_cast<int>(pick.size()) == p - 1)
      return true;
    for (int x = next; x <= k; ++x) {
      pick.push_back(x);
      bool ok = self(self, x + 1);
      pick.pop_back();
      if (!ok)
        return false;
    }
    return true;
  };
  return rec(rec, 1);
}

} // namespace detail

inline bool certify_low_treedepth(const Graph &g, const Coloring &c, int p,
                                  int certify_limit = 20) {
  if (g.order() <= certify_limit && g.order() <= 63)
    return is_p_centered(g, c, p, std::min(certify_limit, 63));
  return detail::classes_have_low_treedepth(g, c, p);
}

// Augment with `steps` levels (starting at p, doubling), greedily color the
// underlying graph in reverse degeneracy order, keep the first certified
// coloring. Stops doubling once the augmentation no longer grows; then falls
// back to all-distinct colors, which are centered.
inline ColoringReport low_tdepth_coloring_traced(const Graph &g, int p,
                                                 const ColoringOptions &opt = {}) {
  if (p < 1)
    throw DomainError("low_tdepth_coloring: p must be at least 1");
  ColoringReport out;
  const int n = g.order();
  if (n == 0) {
    out.coloring = make_coloring({});
    return out;
  }
  int last_arcs = -1;
  for (int steps = std::max(1, p); steps <= opt.max_steps; steps *= 2) {
    auto trace = augment(g, steps);
    const auto &top = trace.steps.back();
    auto c = detail::greedy_reverse_degeneracy(underlying_graph(top));
    if (certify_low_treedepth(g, c, p, opt.certify_limit)) {
      out.coloring = std::move(c);
      out.steps = steps;
      return out;
    }
    if (top.arc_count() == last_arcs)
      break;
    last_arcs = top.arc_count();
  }
  std::vector<int> distinct(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v)
    distinct[v] = v + 1;
  out.coloring = make_coloring(std::move(distinct));
  out.fallback = true;
  return out;
}

inline Coloring low_tdepth_coloring(const Graph &g, int p,
                                    const ColoringOptions &opt = {}) {
  return low_tdepth_coloring_traced(g, p, opt).coloring;
}

} // namespace gradkit
