#pragma once

// Rooted forests, their closures, and the tree-decompositions they induce.

#include <algorithm>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "gradkit/error.hpp"
#include "gradkit/graph.hpp"

namespace gradkit {

class RootedForest {
public:
  RootedForest() = default;

  // parent[v] = -1 marks a root. Throws DomainError on out-of-range parents
  // or cycles.
  explicit RootedForest(std::vector<Vertex> parent)
      : parent_(std::move(parent)), height_(parent_.size(), 0) {
    const int n = order();
    for (Vertex v = 0; v < n; ++v)
      if (parent_[v] < -1 || parent_[v] >= n || parent_[v] == v)
        throw DomainError("rooted forest: bad parent for vertex " +
                          std::to_string(v + 1));
    std::vector<Vertex> chain;
    for (Vertex v = 0; v < n; ++v) {
      chain.clear();
      Vertex x = v;
      while (x >= 0 && height_[x] == 0) {
        if (chain.size() > static_cast<std::size_t>(n))
          throw DomainError("rooted forest: parent pointers contain a cycle");
        chain.push_back(x);
        height_[x] = -1; // on the current chain
        x = parent_[x];
      }
      if (x >= 0 && height_[x] < 0)
        throw DomainError("rooted forest: parent pointers contain a cycle");
      int h = x >= 0 ? height_[x] : 0;
      for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        height_[*it] = ++h;
    }
  }

  int order() const { return static_cast<int>(parent_.size()); }
  Vertex parent(Vertex v) const { return parent_[v]; }
  const std::vector<Vertex> &parents() const { return parent_; }
  // Depth of v counted from its root, root = 1.
  int height(Vertex v) const { return height_[v]; }
  const std::vector<int> &heights() const { return height_; }
  int height() const {
    int h = 0;
    for (int x : height_)
      h = std::max(h, x);
    return h;
  }

  std::vector<Vertex> roots() const {
    std::vector<Vertex> r;
    for (Vertex v = 0; v < order(); ++v)
      if (parent_[v] < 0)
        r.push_back(v);
    return r;
  }

  // a <=_F b: a lies on the path from b to its root (a == b included).
  bool is_ancestor(Vertex a, Vertex b) const {
    if (height_[a] > height_[b])
      return false;
    while (height_[b] > height_[a])
      b = parent_[b];
    return a == b;
  }

  // Root path of v, root first.
  std::vector<Vertex> root_path(Vertex v) const {
    std::vector<Vertex> p;
    for (Vertex x = v; x >= 0; x = parent_[x])
      p.push_back(x);
    std::reverse(p.begin(), p.end());
    return p;
  }

  friend bool operator==(const RootedForest &a, const RootedForest &b) {
    return a.parent_ == b.parent_;
  }

private:
  std::vector<Vertex> parent_;
  std::vector<int> height_;
};

// Comparability graph of the ancestor order.
inline Graph closure(const RootedForest &f) {
  EdgeList e;
  for (Vertex v = 0; v < f.order(); ++v)
    for (Vertex a = f.parent(v); a >= 0; a = f.parent(a))
      e.emplace_back(a, v);
  return build_graph(f.order(), e);
}

// First edge of g not contained in clos(f), if any.
inline std::optional<Edge> closure_violation(const Graph &g,
                                             const RootedForest &f) {
  if (f.order() != g.order())
    throw DomainError("forest and graph have different orders");
  for (const auto &[u, v] : g.edges())
    if (!f.is_ancestor(u, v) && !f.is_ancestor(v, u))
      return Edge{u, v};
  return std::nullopt;
}

inline bool closure_contains(const Graph &g, const RootedForest &f) {
  return !closure_violation(g, f);
}

// Depth-first forest: roots are the lowest unvisited ids, neighbours are
// explored in increasing order.
inline RootedForest dfs_forest(const Graph &g) {
  const int n = g.order();
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s])
      continue;
    seen[s] = 1;
    stack.assign(1, {s, 0});
    while (!stack.empty()) {
      auto &[v, i] = stack.back();
      auto nb = g.neighbors(v);
      if (i == nb.size()) {
        stack.pop_back();
        continue;
      }
      Vertex w = nb[i++];
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        stack.push_back({w, 0});
      }
    }
  }
  return RootedForest(std::move(parent));
}

struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags; // bag of tree node i
  EdgeList tree_edges;

  int node_count() const { return static_cast<int>(bags.size()); }
  // max bag size - 1; -1 for the empty decomposition
  int width() const {
    int w = 0;
    for (const auto &b : bags)
      w = std::max(w, static_cast<int>(b.size()));
    return w - 1;
  }
};

// T = F with consecutive roots chained, bag(x) = root path of x
// (root first). Node x of T is forest vertex x.
inline TreeDecomposition forest_to_decomposition(const RootedForest &f) {
  TreeDecomposition t;
  const int n = f.order();
  t.bags.resize(static_cast<std::size_t>(n));
  // Parents before children so each bag extends its parent's.
  std::vector<Vertex> by_height(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v)
    by_height[v] = v;
  std::stable_sort(by_height.begin(), by_height.end(), [&](Vertex a, Vertex b) {
    return f.height(a) < f.height(b);
  });
  Vertex prev_root = -1;
  for (Vertex v : by_height) {
    Vertex p = f.parent(v);
    if (p >= 0) {
      t.bags[v] = t.bags[p];
      t.tree_edges.emplace_back(p, v);
    } else {
      if (prev_root >= 0)
        t.tree_edges.emplace_back(prev_root, v);
      prev_root = v;
    }
    t.bags[v].push_back(v);
  }
  return t;
}

// Reason the decomposition is invalid for g, or nullopt when it is valid.
inline std::optional<std::string>
decomposition_error(const Graph &g, const TreeDecomposition &t) {
  const int n = g.order(), nodes = t.node_count();
  if (nodes == 0)
    return n == 0 ? std::nullopt
                  : std::optional<std::string>("no tree nodes for a nonempty "
                                               "graph");
  if (static_cast<int>(t.tree_edges.size()) != nodes - 1)
    return "tree has " + std::to_string(nodes) + " nodes but " +
           std::to_string(t.tree_edges.size()) + " edges";
  for (const auto &[a, b] : t.tree_edges)
    if (a < 0 || b < 0 || a >= nodes || b >= nodes)
      return std::string("tree edge endpoint out of range");
  auto tree = build_graph(nodes, t.tree_edges);
  if (tree.size() != nodes - 1 || !is_connected(tree))
    return std::string("tree edges do not form a tree");

  std::vector<std::vector<int>> holders(static_cast<std::size_t>(n));
  std::vector<std::vector<Vertex>> sorted(static_cast<std::size_t>(nodes));
  for (int x = 0; x < nodes; ++x) {
    auto &bag = sorted[x];
    bag = t.bags[x];
    std::sort(bag.begin(), bag.end());
    if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
      return "bag " + std::to_string(x + 1) + " repeats a vertex";
    for (Vertex v : bag) {
      if (v < 0 || v >= n)
        return "bag " + std::to_string(x + 1) + " has a vertex outside G";
      holders[v].push_back(x);
    }
  }
  // A node set of a tree is a subtree iff it spans |set| - 1 tree edges.
  std::vector<int> spanned(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> common;
  for (const auto &[a, b] : t.tree_edges) {
    common.clear();
    std::set_intersection(sorted[a].begin(), sorted[a].end(),
                          sorted[b].begin(), sorted[b].end(),
                          std::back_inserter(common));
    for (Vertex v : common)
      ++spanned[v];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (holders[v].empty())
      return "vertex " + std::to_string(v + 1) + " is in no bag";
    if (spanned[v] + 1 != static_cast<int>(holders[v].size()))
      return "bags holding vertex " + std::to_string(v + 1) +
             " are not a subtree";
  }
  for (const auto &[u, v] : g.edges()) {
    // holders are ascending, so a merge finds a common bag.
    const auto &a = holders[u], &b = holders[v];
    std::size_t i = 0, j = 0;
    bool found = false;
    while (i < a.size() && j < b.size() && !found) {
      if (a[i] == b[j])
        found = true;
      else if (a[i] < b[j])
        ++i;
      else
        ++j;
    }
    if (!found)
      return "edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
             ") lies in no bag";
  }
  return std::nullopt;
}

inline bool is_valid_decomposition(const Graph &g, const TreeDecomposition &t) {
  return !decomposition_error(g, t);
}

} // namespace gradkit
