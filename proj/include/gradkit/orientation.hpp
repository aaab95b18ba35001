#pragma once

#include <algorithm>
#include <vector>

#include "gradkit/graph.hpp"

namespace gradkit {

struct DegeneracyOrder {
  std::vector<Vertex> order;   // removal sequence
  std::vector<int> position;   // position[v] = index of v in order
  int delta_max = 0;           // largest degree seen at a removal
};

struct Orientation {
  ArcListDigraph digraph;
  DegeneracyOrder order;
};

// Smallest-last peeling. Each removed vertex v receives an arc from every
// neighbour still present, so indegree(v) equals its degree at removal and
// the orientation is acyclic (arcs point from later to earlier removals).
//
// Buckets are stacks with lazy deletion: a vertex is pushed again whenever
// its degree drops and stale copies are skipped on pop. Total pushes are
// n + 2m, and the scan pointer drops by at most one per removal, so the whole
// run is O(n + m). Initial buckets are filled so that lower ids pop first.
inline Orientation orient(const Graph &g) {
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  int max_deg = 0;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<std::vector<Vertex>> bucket(static_cast<std::size_t>(max_deg) +
                                          1);
  for (Vertex v = n - 1; v >= 0; --v)
    bucket[deg[v]].push_back(v);

  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  Orientation result;
  auto &ord = result.order;
  ord.order.reserve(static_cast<std::size_t>(n));
  ord.position.assign(static_cast<std::size_t>(n), -1);
  // indegree(v) = degree of v at its removal
  std::vector<int> offset(static_cast<std::size_t>(n) + 1, 0);

  int delta = 0;
  while (static_cast<int>(ord.order.size()) < n) {
    auto &b = bucket[delta];
    while (!b.empty() && (removed[b.back()] || deg[b.back()] != delta))
      b.pop_back();
    if (b.empty()) {
      ++delta;
      continue;
    }
    Vertex v = b.back();
    b.pop_back();
    removed[v] = 1;
    offset[v + 1] = delta;
    ord.position[v] = static_cast<int>(ord.order.size());
    ord.order.push_back(v);
    ord.delta_max = std::max(ord.delta_max, delta);
    for (Vertex w : g.neighbors(v))
      if (!removed[w])
        bucket[--deg[w]].push_back(w);
    if (delta > 0)
      --delta;
  }
  std::vector<std::vector<Vertex>>().swap(bucket);

  // Arc w -> v for every neighbour w removed after v. Ids follow removal
  // order, then neighbour order.
  for (int v = 0; v < n; ++v)
    offset[v + 1] += offset[v];
  std::vector<InArc> entries(static_cast<std::size_t>(offset[n]));
  int id = 0;
  for (Vertex v : ord.order) {
    int at = offset[v];
    for (Vertex w : g.neighbors(v))
      if (ord.position[w] > ord.position[v])
        entries[at++] = InArc{w, ++id, 1};
  }
  result.digraph =
      ArcListDigraph::from_lists(std::move(offset), std::move(entries));
  return result;
}

// Kahn-style check used by tests and the verifier.
inline bool is_acyclic(const ArcListDigraph &g) {
  const int n = g.order();
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(n));
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (const auto &a : g.in_arcs(v)) {
      out[a.source].push_back(v);
      ++indeg[v];
    }
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < n; ++v)
    if (indeg[v] == 0)
      ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++seen;
    for (Vertex w : out[v])
      if (--indeg[w] == 0)
        ready.push_back(w);
  }
  return seen == n;
}

} // namespace gradkit
