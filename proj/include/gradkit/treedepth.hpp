#pragma once

// Tree-depth: exact value with a witness forest, and the decision problem
// td(G) <= k.
//
// Both rest on td(G) = max over components, and for connected G
// td(G) = 1 + min_v td(G - v).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gradkit/error.hpp"
#include "gradkit/forest.hpp"
#include "gradkit/graph.hpp"

namespace gradkit {

struct TreedepthResult {
  int depth = 0;
  RootedForest forest;
};

// 1 + d + ... + d^(t-1), saturated at 2^62.
inline long long fin_bound(int d, int t) {
  constexpr long long cap = 1LL << 62;
  long long sum = 0, term = 1;
  for (int i = 0; i < t; ++i) {
    sum = std::min(cap, sum + term);
    term = (d != 0 && term > cap / d) ? cap : term * d;
  }
  return sum;
}

namespace detail {

class ExactTreedepth {
public:
  using Mask = std::uint64_t;

  explicit ExactTreedepth(const Graph &g) : adj_(g.order(), 0) {
    for (const auto &[u, v] : g.edges()) {
      adj_[u] |= Mask{1} << v;
      adj_[v] |= Mask{1} << u;
    }
  }

  int solve(Mask s) {
    if (std::has_single_bit(s))
      return 1;
    if (auto it = memo_.find(s); it != memo_.end())
      return it->second.depth;

    const int size = std::popcount(s);
    int min_deg = size, max_deg = -1;
    Vertex universal = -1;
    std::vector<std::pair<int, Vertex>> order;
    for (Mask r = s; r; r &= r - 1) {
      Vertex v = std::countr_zero(r);
      int d = std::popcount(adj_[v] & s);
      min_deg = std::min(min_deg, d);
      if (d > max_deg)
        max_deg = d;
      if (d == size - 1 && universal < 0)
        universal = v;
      order.push_back({-d, v});
    }
    Entry best{size + 1, -1};
    if (min_deg == size - 1) {
      best = {size, universal}; // clique
    } else if (universal >= 0) {
      // A universal vertex can always be taken as the root.
      best = {1 + solve_all(s & ~(Mask{1} << universal), size), universal};
    } else {
      const int lower = min_deg + 1;
      std::sort(order.begin(), order.end());
      for (const auto &[nd, v] : order) {
        int d = 1 + solve_all(s & ~(Mask{1} << v), best.depth - 1);
        if (d < best.depth)
          best = {d, v};
        if (best.depth <= lower)
          break;
      }
    }
    memo_[s] = best;
    return best.depth;
  }

  // Witness: parent pointers for the vertices in s, hanging below `above`.
  void build(Mask s, Vertex above, std::vector<Vertex> &parent) {
    for (Mask c : components(s)) {
      Vertex root;
      if (std::has_single_bit(c)) {
        root = std::countr_zero(c);
      } else {
        solve(c);
        root = memo_.at(c).root;
      }
      parent[root] = above;
      build(c & ~(Mask{1} << root), root, parent);
    }
  }

  std::vector<Mask> components(Mask s) const {
    std::vector<Mask> out;
    while (s) {
      Mask seen = s & (~s + 1), frontier = seen;
      while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1)
          next |= adj_[std::countr_zero(f)];
        next &= s & ~seen;
        seen |= next;
        frontier = next;
      }
      out.push_back(seen);
      s &= ~seen;
    }
    return out;
  }

private:
  struct Entry {
    int depth;
    Vertex root;
  };

  // max over components; stops early once the value reaches `stop`.
  int solve_all(Mask s, int stop) {
    int d = 0;
    for (Mask c : components(s)) {
      d = std::max(d, solve(c));
      if (d >= stop)
        break;
    }
    return d;
  }

  std::vector<Mask> adj_;
  std::unordered_map<Mask, Entry> memo_;
};

} // namespace detail

// Exact tree-depth with an optimal forest. Each connected component may have
// at most `component_limit` (<= 64) vertices.
inline TreedepthResult treedepth_exact(const Graph &g, int component_limit = 20) {
  component_limit = std::min(component_limit, 64);
  TreedepthResult out;
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
  for (const auto &comp : component_vertex_sets(g)) {
    if (static_cast<int>(comp.size()) > component_limit)
      throw OracleLimitError("tree-depth solver limit exceeded: component of " +
                             std::to_string(comp.size()) + " vertices > " +
                             std::to_string(component_limit));
    auto sub = induced_subgraph(g, comp);
    detail::ExactTreedepth solver(sub.graph);
    const int k = sub.graph.order();
    auto full = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    out.depth = std::max(out.depth, solver.solve(full));
    std::vector<Vertex> local(static_cast<std::size_t>(k), -1);
    solver.build(full, -1, local);
    for (int i = 0; i < k; ++i)
      parent[sub.original[i]] = local[i] < 0 ? -1 : sub.original[local[i]];
  }
  out.forest = RootedForest(std::move(parent));
  return out;
}

namespace detail {

class DecideTreedepth {
public:
  explicit DecideTreedepth(const Graph &g) : g_(g) {}

  // vertices: a connected vertex set of g, ascending.
  bool decide(const std::vector<Vertex> &vertices, int k) {
    const int size = static_cast<int>(vertices.size());
    if (size <= k)
      return true;
    if (k <= 1)
      return false;
    auto key = std::make_pair(k, vertices);
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;

    auto sub = induced_subgraph(g_, vertices);
    const Graph &h = sub.graph;
    int min_deg = size;
    for (Vertex v = 0; v < size; ++v)
      min_deg = std::min(min_deg, h.degree(v));
    bool answer;
    if (min_deg + 1 > k ||
        static_cast<long long>(size) > fin_bound(h.max_degree(), k) ||
        static_cast<long long>(dfs_forest(h).height()) >= (1LL << std::min(k, 62))) {
      answer = false;
    } else {
      std::vector<Vertex> order(static_cast<std::size_t>(size));
      for (int i = 0; i < size; ++i)
        order[i] = i;
      std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return h.degree(a) > h.degree(b);
      });
      answer = false;
      std::vector<Vertex> rest;
      for (Vertex root : order) {
        rest.clear();
        for (Vertex v = 0; v < size; ++v)
          if (v != root)
            rest.push_back(v);
        auto minus = induced_subgraph(h, rest);
        bool ok = true;
        for (const auto &comp : component_vertex_sets(minus.graph)) {
          std::vector<Vertex> ids;
          ids.reserve(comp.size());
          for (Vertex v : comp)
            ids.push_back(sub.original[rest[v]]);
          std::sort(ids.begin(), ids.end());
          if (!decide(ids, k - 1)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          answer = true;
          break;
        }
      }
    }
    memo_.emplace(std::move(key), answer);
    return answer;
  }

private:
  const Graph &g_;
  std::map<std::pair<int, std::vector<Vertex>>, bool> memo_;
};

} // namespace detail

// td(G) <= k. A DFS forest of height >= 2^k refutes immediately; otherwise
// an exact root-choice search runs per component, repeating the DFS and
// degree-based refutations on every subproblem.
inline bool treedepth_decide(const Graph &g, int k) {
  if (k < 1)
    throw DomainError("treedepth_decide: k must be at least 1");
  if (g.order() == 0)
    return true;
  if (static_cast<long long>(dfs_forest(g).height()) >= (1LL << std::min(k, 62)))
    return false;
  detail::DecideTreedepth search(g);
  for (const auto &comp : component_vertex_sets(g))
    if (!search.decide(comp, k))
      return false;
  return true;
}

} // namespace gradkit
