#pragma once

// Core graph representations.
//
// Vertices are 0-based integers inside the library; the text formats in
// io.hpp are 1-based. A Graph is immutable once built: a sorted, simplified
// edge list plus CSR adjacency. An ArcListDigraph stores, for every vertex,
// the list of its in-arcs (source, arc id, weight), which is the layout every
// augmentation and query routine works on.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gradkit/error.hpp"

namespace gradkit {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using EdgeList = std::vector<Edge>;

class Graph;
Graph build_graph(int n, const EdgeList &raw_edges);

class Graph {
public:
  Graph() = default;

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  // Sorted ascending, each edge stored once as (u, v) with u < v.
  const EdgeList &edges() const { return edges_; }

  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v],
            targets_.data() + offsets_[v + 1]};
  }

  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  int max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < n_; ++v)
      d = std::max(d, degree(v));
    return d;
  }

  bool adjacent(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  friend Graph build_graph(int n, const EdgeList &raw_edges);

  int n_ = 0;
  EdgeList edges_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> targets_;
};

namespace detail {

// Stable counting sort of edges by key(e) in [0, n).
template <typename Key>
EdgeList bucket_sort(const EdgeList &in, int n, Key key) {
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  for (const auto &e : in)
    ++count[key(e) + 1];
  for (int i = 0; i < n; ++i)
    count[i + 1] += count[i];
  EdgeList out(in.size());
  for (const auto &e : in)
    out[count[key(e)]++] = e;
  return out;
}

} // namespace detail

// Simplifies raw_edges (drops loops, merges parallel and antiparallel pairs)
// with two bucket-sort passes, then builds sorted CSR adjacency. Linear in
// n + |raw_edges|.
inline Graph build_graph(int n, const EdgeList &raw_edges) {
  if (n < 0)
    throw InputError("negative vertex count");
  EdgeList normalized;
  normalized.reserve(raw_edges.size());
  for (std::size_t i = 0; i < raw_edges.size(); ++i) {
    auto [u, v] = raw_edges[i];
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InputError("edge #" + std::to_string(i + 1) + " (" +
                       std::to_string(u + 1) + "," + std::to_string(v + 1) +
                       ") has an endpoint outside 1.." + std::to_string(n));
    if (u == v)
      continue;
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  // Sort by max endpoint, then stably by min endpoint: lexicographic order.
  auto by_max = detail::bucket_sort(normalized, n,
                                    [](const Edge &e) { return e.second; });
  auto sorted =
      detail::bucket_sort(by_max, n, [](const Edge &e) { return e.first; });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(sorted);
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto &[u, v] : g.edges_) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (int i = 0; i < n; ++i)
    g.offsets_[i + 1] += g.offsets_[i];
  g.targets_.resize(2 * g.edges_.size());
  std::vector<int> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are in (min, max) order, so every list comes out ascending.
  for (const auto &[u, v] : g.edges_) {
    g.targets_[cursor[u]++] = v;
    g.targets_[cursor[v]++] = u;
  }
  return g;
}

struct InArc {
  Vertex source;
  int id;     // 1..m, unique
  int weight; // nonnegative length
};

struct Arc {
  Vertex from;
  Vertex to;
  int weight = 1;
  friend bool operator==(const Arc &, const Arc &) = default;
};

class ArcListDigraph;
ArcListDigraph build_digraph(int n, const std::vector<Arc> &arcs);

// D[v] holds one entry per arc (source, v). At most one arc per ordered
// pair, no loops. The lists are stored back to back: D[v] is
// entries_[offset_[v] .. offset_[v+1]).
class ArcListDigraph {
public:
  ArcListDigraph() : offset_(1, 0) {}
  explicit ArcListDigraph(int n)
      : offset_(static_cast<std::size_t>(n) + 1, 0) {}

  int order() const { return static_cast<int>(offset_.size()) - 1; }
  int arc_count() const { return static_cast<int>(entries_.size()); }

  std::span<const InArc> in_arcs(Vertex v) const {
    return {entries_.data() + offset_[v],
            static_cast<std::size_t>(offset_[v + 1] - offset_[v])};
  }

  int indegree(Vertex v) const { return offset_[v + 1] - offset_[v]; }

  int max_indegree() const {
    int md = 0;
    for (Vertex v = 0; v < order(); ++v)
      md = std::max(md, indegree(v));
    return md;
  }

  // Weight of arc x -> y, found by scanning D[y]: O(md).
  std::optional<int> arc_weight(Vertex x, Vertex y) const {
    for (const auto &a : in_arcs(y))
      if (a.source == x)
        return a.weight;
    return std::nullopt;
  }

  // All arcs ordered by arc id.
  std::vector<Arc> arcs() const {
    std::vector<Arc> out(entries_.size());
    for (Vertex v = 0; v < order(); ++v)
      for (const auto &a : in_arcs(v))
        out[a.id - 1] = Arc{a.source, v, a.weight};
    return out;
  }

  // All arcs ordered by (from, to).
  std::vector<Arc> sorted_arcs() const {
    auto out = arcs();
    std::sort(out.begin(), out.end(), [](const Arc &a, const Arc &b) {
      return std::pair(a.from, a.to) < std::pair(b.from, b.to);
    });
    return out;
  }

  // Adopts ready-made lists: offset has n + 1 entries, the lists hold no
  // loops or repeated sources, and ids are a permutation of 1..m.
  static ArcListDigraph from_lists(std::vector<int> offset,
                                   std::vector<InArc> entries) {
    ArcListDigraph g;
    g.offset_ = std::move(offset);
    g.entries_ = std::move(entries);
    return g;
  }

private:
  friend ArcListDigraph build_digraph(int n, const std::vector<Arc> &arcs);

  std::vector<int> offset_;
  std::vector<InArc> entries_;
};

// Keeps one arc per ordered pair with the minimum weight among duplicates;
// surviving arcs get ids 1..m in order of first appearance.
inline ArcListDigraph build_digraph(int n, const std::vector<Arc> &arcs) {
  if (n < 0)
    throw InputError("negative vertex count");
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto &a = arcs[i];
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n)
      throw InputError("arc #" + std::to_string(i + 1) + " (" +
                       std::to_string(a.from + 1) + "," +
                       std::to_string(a.to + 1) +
                       ") has an endpoint outside 1.." + std::to_string(n));
    if (a.from == a.to)
      throw InputError("arc #" + std::to_string(i + 1) + " is a loop at " +
                       std::to_string(a.from + 1));
    if (a.weight < 0)
      throw InputError("arc #" + std::to_string(i + 1) +
                       " has a negative weight");
  }

  // Group arc indices by head, keep first occurrence per source.
  std::vector<int> start(static_cast<std::size_t>(n) + 1, 0);
  for (const auto &a : arcs)
    ++start[a.to + 1];
  for (int i = 0; i < n; ++i)
    start[i + 1] += start[i];
  std::vector<int> by_head(arcs.size());
  {
    std::vector<int> cursor(start.begin(), start.end() - 1);
    for (std::size_t i = 0; i < arcs.size(); ++i)
      by_head[cursor[arcs[i].to]++] = static_cast<int>(i);
  }
  std::vector<int> first(arcs.size(), -1); // index of the surviving copy
  std::vector<int> best_weight(arcs.size(), 0);
  std::vector<int> seen_at(static_cast<std::size_t>(n), -1);
  for (Vertex head = 0; head < n; ++head) {
    for (int k = start[head]; k < start[head + 1]; ++k) {
      int i = by_head[k];
      Vertex src = arcs[i].from;
      if (seen_at[src] < 0) {
        seen_at[src] = i;
        first[i] = i;
        best_weight[i] = arcs[i].weight;
      } else {
        int f = seen_at[src];
        first[i] = f;
        best_weight[f] = std::min(best_weight[f], arcs[i].weight);
      }
    }
    for (int k = start[head]; k < start[head + 1]; ++k)
      seen_at[arcs[by_head[k]].from] = -1;
  }

  ArcListDigraph g(n);
  for (std::size_t i = 0; i < arcs.size(); ++i)
    if (first[i] == static_cast<int>(i))
      ++g.offset_[arcs[i].to + 1];
  for (int v = 0; v < n; ++v)
    g.offset_[v + 1] += g.offset_[v];
  g.entries_.resize(static_cast<std::size_t>(g.offset_[n]));
  std::vector<int> cursor(g.offset_.begin(), g.offset_.end() - 1);
  int id = 0;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (first[i] != static_cast<int>(i))
      continue;
    g.entries_[cursor[arcs[i].to]++] =
        InArc{arcs[i].from, ++id, best_weight[i]};
  }
  return g;
}

inline std::optional<int> has_arc(const ArcListDigraph &g, Vertex x,
                                  Vertex y) {
  if (x == y)
    return std::nullopt;
  return g.arc_weight(x, y);
}

// Forgets directions and weights; antiparallel pairs become one edge.
inline Graph underlying_graph(const ArcListDigraph &g) {
  EdgeList edges;
  edges.reserve(static_cast<std::size_t>(g.arc_count()));
  for (Vertex v = 0; v < g.order(); ++v)
    for (const auto &a : g.in_arcs(v))
      edges.emplace_back(a.source, v);
  return build_graph(g.order(), edges);
}

// Component id per vertex (ids in order of smallest member) and the count.
struct Components {
  std::vector<int> id;
  int count = 0;
};

inline Components connected_components(const Graph &g) {
  Components c;
  c.id.assign(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (c.id[s] >= 0)
      continue;
    c.id[s] = c.count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (c.id[w] < 0) {
          c.id[w] = c.count;
          stack.push_back(w);
        }
    }
    ++c.count;
  }
  return c;
}

inline bool is_connected(const Graph &g) {
  return g.order() == 0 || connected_components(g).count == 1;
}

// Vertex lists per component, each ascending.
inline std::vector<std::vector<Vertex>> component_vertex_sets(const Graph &g) {
  auto c = connected_components(g);
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(c.count));
  for (Vertex v = 0; v < g.order(); ++v)
    out[c.id[v]].push_back(v);
  return out;
}

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original; // local id -> id in the parent graph
};

// Local ids follow the order of `vertices`.
inline InducedSubgraph induced_subgraph(const Graph &g,
                                        std::span<const Vertex> vertices) {
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    local[vertices[i]] = static_cast<int>(i);
  EdgeList edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbors(vertices[i]))
      if (local[w] > static_cast<int>(i))
        edges.emplace_back(static_cast<int>(i), local[w]);
  return {build_graph(static_cast<int>(vertices.size()), edges),
          {vertices.begin(), vertices.end()}};
}

inline InducedSubgraph induced_subgraph(const Graph &g,
                                        const std::vector<Vertex> &vertices) {
  return induced_subgraph(g, std::span<const Vertex>(vertices));
}

// BFS distances from source; -1 marks unreachable.
inline std::vector<int> bfs_distances(const Graph &g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

} // namespace gradkit
