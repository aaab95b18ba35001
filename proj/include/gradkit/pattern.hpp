#pragma once

// Counting and listing copies of a small pattern H.
//
// Counts are of subgraph copies: injective homomorphisms H -> G divided by
// |Aut(H)|. The injective count runs as a dynamic program over a
// tree-decomposition; on a full graph it is assembled from the induced
// subgraphs on every set of at most h color classes of a low tree-depth
// coloring, with inclusion-exclusion on the exact color set of each image.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gradkit/coloring.hpp"
#include "gradkit/error.hpp"
#include "gradkit/forest.hpp"
#include "gradkit/graph.hpp"

namespace gradkit {

constexpr int kPatternHardLimit = 8;

class Pattern {
public:
  const Graph &graph() const { return graph_; }
  int order() const { return graph_.order(); }
  long long automorphisms() const {
    return static_cast<long long>(automorphisms_.size());
  }
  // Every automorphism as a permutation of 0..h-1.
  const std::vector<std::vector<Vertex>> &automorphism_list() const {
    return automorphisms_;
  }

private:
  friend Pattern make_pattern(Graph h, int limit, bool allow_disconnected);
  Graph graph_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

// Connected patterns only unless allow_disconnected (internal use).
inline Pattern make_pattern(Graph h, int limit = 5,
                            bool allow_disconnected = false) {
  limit = std::min(limit, kPatternHardLimit);
  if (h.order() < 1)
    throw DomainError("pattern must have at least one vertex");
  if (h.order() > limit)
    throw DomainError("pattern order " + std::to_string(h.order()) +
                      " exceeds the pattern limit " + std::to_string(limit));
  if (!allow_disconnected && !is_connected(h))
    throw DomainError("pattern must be connected");
  Pattern p;
  std::vector<Vertex> perm(static_cast<std::size_t>(h.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto &[u, v] : h.edges())
      if (!h.adjacent(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok)
      p.automorphisms_.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  p.graph_ = std::move(h);
  return p;
}

namespace detail {

using HMask = std::uint32_t;

inline std::vector<HMask> pattern_masks(const Graph &h) {
  std::vector<HMask> adj(static_cast<std::size_t>(h.order()), 0);
  for (const auto &[a, b] : h.edges()) {
    adj[a] |= HMask{1} << b;
    adj[b] |= HMask{1} << a;
  }
  return adj;
}

// Injective homomorphisms H -> G by dynamic programming over a
// tree-decomposition T of G. Tree edges whose bags share no vertex split T
// into independent parts. Each part is rooted at its node with the smallest
// bag, and every G-vertex is decided at the topmost node containing it.
// State: node t, the H-vertex (or none) on each vertex of bag(t), and the set
// U of H-vertices still to be placed strictly below t.
class DecompositionDP {
public:
  DecompositionDP(const Graph &g, const TreeDecomposition &t, const Graph &h)
      : g_(g), h_order_(h.order()), hadj_(pattern_masks(h)) {
    const int nodes = t.node_count();
    bags_ = t.bags;
    for (auto &b : bags_)
      std::sort(b.begin(), b.end());
    std::vector<std::vector<int>> nb(static_cast<std::size_t>(nodes));
    std::vector<Vertex> common;
    for (const auto &[a, b] : t.tree_edges) {
      common.clear();
      std::set_intersection(bags_[a].begin(), bags_[a].end(), bags_[b].begin(),
                            bags_[b].end(), std::back_inserter(common));
      if (common.empty())
        continue;
      nb[a].push_back(b);
      nb[b].push_back(a);
    }
    children_.resize(static_cast<std::size_t>(nodes));
    inherit_.resize(static_cast<std::size_t>(nodes));
    std::vector<int> order(static_cast<std::size_t>(nodes));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return bags_[a].size() < bags_[b].size();
    });
    std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
    std::vector<int> queue;
    for (int r : order) {
      if (seen[r])
        continue;
      roots_.push_back(r);
      seen[r] = 1;
      inherit_[r].assign(bags_[r].size(), -1);
      queue.assign(1, r);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        int x = queue[i];
        for (int y : nb[x]) {
          if (seen[y])
            continue;
          seen[y] = 1;
          children_[x].push_back(y);
          auto &inh = inherit_[y];
          inh.assign(bags_[y].size(), -1);
          for (std::size_t j = 0; j < bags_[y].size(); ++j) {
            auto it = std::lower_bound(bags_[x].begin(), bags_[x].end(),
                                       bags_[y][j]);
            if (it != bags_[x].end() && *it == bags_[y][j])
              inh[j] = static_cast<int>(it - bags_[x].begin());
          }
          queue.push_back(y);
        }
      }
    }
    full_ = h_order_ >= 32 ? ~HMask{0} : (HMask{1} << h_order_) - 1;
  }

  long long count() { return distribute_count(roots_, -1, {}, full_); }

  // emit(phi) for every injective homomorphism, phi[a] = image of a.
  void enumerate(const std::function<void(const std::vector<Vertex> &)> &emit) {
    std::vector<Vertex> phi(static_cast<std::size_t>(h_order_), -1);
    distribute_enum(roots_, -1, {}, full_, phi, [&] { emit(phi); });
  }

private:
  using Sigma = std::vector<signed char>;

  std::vector<HMask> components(HMask u) const {
    std::vector<HMask> out;
    while (u) {
      HMask seen = u & (~u + 1), frontier = seen;
      while (frontier) {
        HMask next = 0;
        for (HMask f = frontier; f; f &= f - 1)
          next |= hadj_[std::countr_zero(f)];
        next &= u & ~seen;
        seen |= next;
        frontier = next;
      }
      out.push_back(seen);
      u &= ~seen;
    }
    return out;
  }

  static HMask join(const std::vector<HMask> &comps, unsigned sub) {
    HMask m = 0;
    for (unsigned s = sub; s; s &= s - 1)
      m |= comps[std::countr_zero(s)];
    return m;
  }

  // Ways to place each component of u wholly below one of the nodes in
  // `kids` (children of `parent` with assignment sigma, or part roots).
  long long distribute_count(const std::vector<int> &kids, int parent,
                             const Sigma &sigma, HMask u) {
    if (!u)
      return 1;
    auto comps = components(u);
    const unsigned k = static_cast<unsigned>(comps.size());
    const unsigned all = (1u << k) - 1;
    std::vector<long long> table(std::size_t{1} << k, 0), next;
    table[0] = 1;
    for (int c : kids) {
      next = table;
      for (unsigned mask = 0; mask < all; ++mask) {
        if (!table[mask])
          continue;
        const unsigned rest = all & ~mask;
        for (unsigned sub = rest; sub; sub = (sub - 1) & rest) {
          long long w = place_count(c, parent, sigma, join(comps, sub));
          if (w)
            next[mask | sub] += table[mask] * w;
        }
      }
      table.swap(next);
    }
    return table[all];
  }

  // Assignments of the vertices new at c (not in parent's bag), each to an
  // unused H-vertex of uc or to nothing, that respect every H-edge at a newly
  // placed vertex. f(sigma_c, rest) is invoked per valid assignment.
  template <class F>
  void for_each_placement(int c, int parent, const Sigma &sigma, HMask uc,
                          F &&f) {
    const auto &bag = bags_[c];
    const auto &inh = inherit_[c];
    Sigma sc(bag.size(), -1);
    std::vector<int> fresh;
    for (std::size_t j = 0; j < bag.size(); ++j) {
      if (inh[j] >= 0 && parent >= 0)
        sc[j] = sigma[inh[j]];
      else
        fresh.push_back(static_cast<int>(j));
    }
    auto rec = [&](auto &&self, std::size_t i, HMask rest) -> void {
      if (i == fresh.size()) {
        // Edge checks for every newly placed H-vertex.
        HMask placed = 0;
        std::vector<int> where(static_cast<std::size_t>(h_order_), -1);
        for (std::size_t j = 0; j < bag.size(); ++j)
          if (sc[j] >= 0) {
            where[sc[j]] = static_cast<int>(j);
            placed |= HMask{1} << sc[j];
          }
        for (int j : fresh) {
          if (sc[j] < 0)
            continue;
          for (HMask nbh = hadj_[sc[j]]; nbh; nbh &= nbh - 1) {
            int b = std::countr_zero(nbh);
            if (placed >> b & 1) {
              if (!g_.adjacent(bag[j], bag[where[b]]))
                return;
            } else if (!(rest >> b & 1)) {
              return;
            }
          }
        }
        f(sc, rest);
        return;
      }
      int j = fresh[i];
      self(self, i + 1, rest);
      for (HMask r = rest; r; r &= r - 1) {
        int a = std::countr_zero(r);
        sc[j] = static_cast<signed char>(a);
        self(self, i + 1, rest & ~(HMask{1} << a));
        sc[j] = -1;
      }
    };
    rec(rec, 0, uc);
  }

  long long place_count(int c, int parent, const Sigma &sigma, HMask uc) {
    long long total = 0;
    for_each_placement(c, parent, sigma, uc, [&](const Sigma &sc, HMask rest) {
      total += below_count(c, sc, rest);
    });
    return total;
  }

  long long below_count(int t, const Sigma &sigma, HMask u) {
    if (!u)
      return 1;
    if (children_[t].empty())
      return 0;
    std::string key;
    key.reserve(8 + sigma.size());
    key.append(reinterpret_cast<const char *>(&t), sizeof t);
    key.append(reinterpret_cast<const char *>(&u), sizeof u);
    key.append(reinterpret_cast<const char *>(sigma.data()), sigma.size());
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;
    long long v = distribute_count(children_[t], t, sigma, u);
    memo_.emplace(std::move(key), v);
    return v;
  }

  void distribute_enum(const std::vector<int> &kids, int parent,
                       const Sigma &sigma, HMask u, std::vector<Vertex> &phi,
                       const std::function<void()> &cont) {
    if (!u) {
      cont();
      return;
    }
    auto comps = components(u);
    const unsigned k = static_cast<unsigned>(comps.size());
    const unsigned all = (1u << k) - 1;
    // suffix[i][mask]: ways for kids i.. to take exactly the components in
    // mask
    std::vector<std::vector<long long>> suffix(
        kids.size() + 1, std::vector<long long>(std::size_t{1} << k, 0));
    suffix[kids.size()][0] = 1;
    for (std::size_t i = kids.size(); i-- > 0;) {
      suffix[i] = suffix[i + 1];
      for (unsigned mask = 1; mask <= all; ++mask)
        for (unsigned sub = mask; sub; sub = (sub - 1) & mask) {
          if (!suffix[i + 1][mask & ~sub])
            continue;
          long long w = place_count(kids[i], parent, sigma, join(comps, sub));
          suffix[i][mask] += w * suffix[i + 1][mask & ~sub];
        }
    }
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i,
                                                         unsigned rem) {
      if (!rem) {
        cont();
        return;
      }
      if (i == kids.size() || !suffix[i][rem])
        return;
      if (suffix[i + 1][rem])
        rec(i + 1, rem);
      for (unsigned sub = rem; sub; sub = (sub - 1) & rem) {
        if (!suffix[i + 1][rem & ~sub])
          continue;
        const int c = kids[i];
        for_each_placement(
            c, parent, sigma, join(comps, sub),
            [&](const Sigma &sc, HMask rest) {
              if (!below_count(c, sc, rest))
                return;
              const auto &bag = bags_[c];
              std::vector<int> set_here;
              for (std::size_t j = 0; j < bag.size(); ++j)
                if (sc[j] >= 0 && phi[sc[j]] < 0) {
                  phi[sc[j]] = bag[j];
                  set_here.push_back(sc[j]);
                }
              distribute_enum(children_[c], c, sc, rest, phi,
                              [&] { rec(i + 1, rem & ~sub); });
              for (int a : set_here)
                phi[a] = -1;
            });
      }
    };
    rec(0, all);
  }

  const Graph &g_;
  int h_order_;
  std::vector<HMask> hadj_;
  HMask full_ = 0;
  std::vector<std::vector<Vertex>> bags_;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<int>> inherit_;
  std::vector<int> roots_;
  std::unordered_map<std::string, long long> memo_;
};

} // namespace detail

// Injective homomorphisms of an arbitrary graph h (order <= 8) into g, using
// the decomposition t of g.
inline long long count_injective_on_decomposition(const Graph &g,
                                                  const TreeDecomposition &t,
                                                  const Graph &h) {
  if (h.order() > kPatternHardLimit)
    throw DomainError("pattern too large for the decomposition count");
  if (auto err = decomposition_error(g, t))
    throw InvalidDecompositionError("invalid tree-decomposition: " + *err);
  if (h.order() == 0)
    return 1;
  detail::DecompositionDP dp(g, t, h);
  return dp.count();
}

// Distinct copies of H in g.
inline long long count_on_decomposition(const Graph &g,
                                        const TreeDecomposition &t,
                                        const Pattern &h) {
  return count_injective_on_decomposition(g, t, h.graph()) / h.automorphisms();
}

struct SubsetCount {
  std::vector<int> colors; // ascending color ids
  long long copies = 0;    // copies whose vertices use exactly these colors
};

struct CountReport {
  long long total = 0;
  std::vector<SubsetCount> breakdown; // nonzero entries only
  int colors = 0;                     // colors of the coloring used
};

// Shared state for many pattern queries on one graph: the coloring and, per
// color subset of size <= max_order, the induced subgraph and its
// decomposition.
class PatternCounter {
public:
  PatternCounter(const Graph &g, int max_order,
                 const ColoringOptions &opt = {})
      : g_(g), max_order_(std::clamp(max_order, 1, kPatternHardLimit)) {
    coloring_ = low_tdepth_coloring(g, max_order_ + 1, opt);
    classes_.resize(static_cast<std::size_t>(coloring_.palette) + 1);
    for (Vertex v = 0; v < g.order(); ++v)
      classes_[coloring_.color[v]].push_back(v);
  }

  const Coloring &coloring() const { return coloring_; }
  int max_order() const { return max_order_; }

  // Injective homomorphisms of h into g minus `removed`, per exact color set
  // of the image. For connected h only color sets that are connected in the
  // color adjacency graph can be exact, so the inversion runs over those:
  // exact(C) = sub(C) - sum of exact(D) over connected D strictly inside C.
  // `all_subsets` forces the plain alternating sum over every color subset.
  std::map<std::vector<int>, long long>
  exact_injective(const Graph &h, const std::vector<char> &removed = {},
                  bool all_subsets = false) {
    const int k = h.order();
    if (k < 1 || k > max_order_)
      throw DomainError("pattern order " + std::to_string(k) +
                        " outside 1.." + std::to_string(max_order_) +
                        " for this counter");
    std::map<std::vector<int>, long long> exact;
    std::vector<int> part;
    if (!all_subsets && is_connected(h)) {
      std::vector<std::vector<int>> sets;
      for_each_connected_color_set(
          k, [&](const std::vector<int> &colors) { sets.push_back(colors); });
      std::sort(sets.begin(), sets.end(), [](const auto &x, const auto &y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
      });
      for (const auto &colors : sets) {
        long long x = count_subset(colors, h, removed);
        const unsigned s = static_cast<unsigned>(colors.size());
        for (unsigned m = 1; m + 1 < (1u << s); ++m) {
          part.clear();
          for (unsigned i = 0; i < s; ++i)
            if (m >> i & 1)
              part.push_back(colors[i]);
          if (auto it = exact.find(part); it != exact.end())
            x -= it->second;
        }
        if (x)
          exact[colors] = x;
      }
      return exact;
    }
    std::map<std::vector<int>, long long> sub;
    for_each_subset(k, [&](const std::vector<int> &colors) {
      long long c = count_subset(colors, h, removed);
      if (c)
        sub[colors] = c;
    });
    for (const auto &[colors, value] : sub) {
      (void)value;
      const unsigned s = static_cast<unsigned>(colors.size());
      long long x = 0;
      for (unsigned m = 1; m < (1u << s); ++m) {
        part.clear();
        for (unsigned i = 0; i < s; ++i)
          if (m >> i & 1)
            part.push_back(colors[i]);
        auto it = sub.find(part);
        if (it == sub.end())
          continue;
        x += ((s - std::popcount(m)) % 2 ? -1 : 1) * it->second;
      }
      if (x)
        exact[colors] = x;
    }
    return exact;
  }

  long long injective(const Graph &h, const std::vector<char> &removed = {}) {
    long long total = 0;
    for (const auto &[colors, x] : exact_injective(h, removed)) {
      (void)colors;
      total += x;
    }
    return total;
  }

  CountReport count(const Pattern &h,
                    const std::optional<std::vector<Vertex>> &s = std::nullopt) {
    CountReport r;
    r.colors = coloring_.palette;
    auto all = exact_injective(h.graph());
    std::map<std::vector<int>, long long> net = all;
    if (s) {
      auto removed = removal_mask(*s);
      for (const auto &[colors, x] : exact_injective(h.graph(), removed))
        net[colors] -= x;
    }
    for (const auto &[colors, x] : net) {
      if (!x)
        continue;
      r.breakdown.push_back({colors, x / h.automorphisms()});
      r.total += x / h.automorphisms();
    }
    return r;
  }

  // Each copy once, as its lexicographically smallest vertex map over
  // Aut(H); sorted. Copies must hit s when given.
  std::vector<std::vector<Vertex>>
  list(const Pattern &h,
       const std::optional<std::vector<Vertex>> &s = std::nullopt) {
    const int k = h.order();
    if (k < 1 || k > max_order_)
      throw DomainError("pattern order outside the counter's range");
    std::vector<char> in_s;
    if (s)
      in_s = removal_mask(*s);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> image;
    for_each_connected_color_set(k, [&](const std::vector<int> &colors) {
      auto &part = part_for(colors);
      if (part.sub.graph.order() < k)
        return;
      detail::DecompositionDP dp(part.sub.graph, part.td, h.graph());
      dp.enumerate([&](const std::vector<Vertex> &phi) {
        image.resize(phi.size());
        for (std::size_t a = 0; a < phi.size(); ++a)
          image[a] = part.sub.original[phi[a]];
        // exact color set
        std::vector<int> used;
        bool hits = !s;
        for (Vertex v : image) {
          used.push_back(coloring_.color[v]);
          if (s && in_s[v])
            hits = true;
        }
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());
        if (used != colors || !hits)
          return;
        for (const auto &alpha : h.automorphism_list()) {
          for (std::size_t a = 0; a < image.size(); ++a) {
            Vertex x = image[alpha[a]], y = image[a];
            if (x < y)
              return; // a smaller representative exists
            if (x > y)
              break;
          }
        }
        out.push_back(image);
      });
    });
    std::sort(out.begin(), out.end());
    return out;
  }

private:
  struct Part {
    InducedSubgraph sub;
    TreeDecomposition td;
  };

  std::vector<char> removal_mask(const std::vector<Vertex> &s) const {
    std::vector<char> m(static_cast<std::size_t>(g_.order()), 0);
    for (Vertex v : s) {
      if (v < 0 || v >= g_.order())
        throw DomainError("vertex set contains a vertex outside the graph");
      m[v] = 1;
    }
    return m;
  }

  // Classes c, d adjacent when some edge of g joins them.
  const Graph &color_graph() {
    if (!color_graph_) {
      EdgeList e;
      for (const auto &[u, v] : g_.edges())
        if (coloring_.color[u] != coloring_.color[v])
          e.emplace_back(coloring_.color[u] - 1, coloring_.color[v] - 1);
      color_graph_ = build_graph(coloring_.palette, e);
    }
    return *color_graph_;
  }

  // Connected color sets of size <= max_size, each once (ESU enumeration),
  // passed to f as ascending color ids.
  template <class F> void for_each_connected_color_set(int max_size, F &&f) {
    const Graph &cg = color_graph();
    const int n = cg.order();
    std::vector<int> in_set(static_cast<std::size_t>(n), 0),
        near(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> set, sorted;
    auto emit = [&] {
      sorted.clear();
      for (Vertex c : set)
        sorted.push_back(c + 1);
      std::sort(sorted.begin(), sorted.end());
      f(sorted);
    };
    auto rec = [&](auto &&self, std::vector<Vertex> ext, Vertex root) -> void {
      emit();
      if (static_cast<int>(set.size()) == max_size)
        return;
      while (!ext.empty()) {
        Vertex w = ext.back();
        ext.pop_back();
        std::vector<Vertex> next = ext;
        for (Vertex u : cg.neighbors(w))
          if (u > root && !in_set[u] && !near[u])
            next.push_back(u);
        set.push_back(w);
        in_set[w] = 1;
        for (Vertex u : cg.neighbors(w))
          ++near[u];
        self(self, std::move(next), root);
        for (Vertex u : cg.neighbors(w))
          --near[u];
        in_set[w] = 0;
        set.pop_back();
      }
    };
    for (Vertex r = 0; r < n; ++r) {
      set.assign(1, r);
      in_set[r] = 1;
      for (Vertex u : cg.neighbors(r))
        ++near[u];
      std::vector<Vertex> ext;
      for (Vertex u : cg.neighbors(r))
        if (u > r)
          ext.push_back(u);
      rec(rec, std::move(ext), r);
      for (Vertex u : cg.neighbors(r))
        --near[u];
      in_set[r] = 0;
    }
  }

  template <class F> void for_each_subset(int max_size, F &&f) {
    const int n_colors = coloring_.palette;
    std::vector<int> pick;
    auto rec = [&](auto &&self, int next) -> void {
      if (!pick.empty())
        f(pick);
      if (static_cast<int>(pick.size()) == max_size)
        return;
      for (int c = next; c <= n_colors; ++c) {
        pick.push_back(c);
        self(self, c + 1);
        pick.pop_back();
      }
    };
    rec(rec, 1);
  }

  Part build_part(const std::vector<int> &colors,
                  const std::vector<char> &removed) const {
    std::vector<Vertex> vs;
    for (int c : colors)
      for (Vertex v : classes_[c])
        if (removed.empty() || !removed[v])
          vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    Part p{induced_subgraph(g_, vs), {}};
    std::vector<int> local(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
      local[i] = coloring_.color[vs[i]];
    RootedForest f;
    try {
      f = centered_to_forest(p.sub.graph, make_coloring(local), false);
    } catch (const NotCenteredError &) {
      f = dfs_forest(p.sub.graph);
    }
    p.td = forest_to_decomposition(f);
    return p;
  }

  Part &part_for(const std::vector<int> &colors) {
    auto it = parts_.find(colors);
    if (it == parts_.end())
      it = parts_.emplace(colors, build_part(colors, {})).first;
    return it->second;
  }

  long long count_subset(const std::vector<int> &colors, const Graph &h,
                         const std::vector<char> &removed) {
    std::size_t size = 0;
    for (int c : colors)
      size += classes_[c].size();
    if (size < static_cast<std::size_t>(h.order()))
      return 0;
    bool any_removed = false;
    if (!removed.empty())
      for (int c : colors)
        for (Vertex v : classes_[c])
          any_removed = any_removed || removed[v];
    if (!any_removed) {
      auto &part = part_for(colors);
      detail::DecompositionDP dp(part.sub.graph, part.td, h);
      return dp.count();
    }
    auto part = build_part(colors, removed);
    if (part.sub.graph.order() < h.order())
      return 0;
    detail::DecompositionDP dp(part.sub.graph, part.td, h);
    return dp.count();
  }

  const Graph &g_;
  int max_order_;
  Coloring coloring_;
  std::vector<std::vector<Vertex>> classes_;
  std::map<std::vector<int>, Part> parts_;
  std::optional<Graph> color_graph_;
};

inline CountReport
count_isomorphs(const Graph &g, const Pattern &h,
                const std::optional<std::vector<Vertex>> &s = std::nullopt,
                const ColoringOptions &opt = {}) {
  PatternCounter counter(g, h.order(), opt);
  return counter.count(h, s);
}

inline std::vector<std::vector<Vertex>>
list_isomorphs(const Graph &g, const Pattern &h,
               const std::optional<std::vector<Vertex>> &s = std::nullopt,
               const ColoringOptions &opt = {}) {
  PatternCounter counter(g, h.order(), opt);
  return counter.list(h, s);
}

enum class Containment { hom, subgraph, induced };

namespace detail {

// Non-edges of h as (a, b) pairs, a < b.
inline EdgeList non_edges(const Graph &h) {
  EdgeList out;
  for (Vertex a = 0; a < h.order(); ++a)
    for (Vertex b = a + 1; b < h.order(); ++b)
      if (!h.adjacent(a, b))
        out.emplace_back(a, b);
  return out;
}

// Injective maps of h into g that are induced embeddings, by alternating sum
// over the edge-supersets of h on the same vertex set.
inline long long induced_injective(PatternCounter &counter, const Graph &h) {
  auto extra = non_edges(h);
  if (extra.size() > 20)
    throw DomainError("pattern has too many non-edges for induced counting");
  long long total = 0;
  for (std::uint32_t m = 0; m < (1u << extra.size()); ++m) {
    EdgeList e = h.edges();
    for (std::size_t i = 0; i < extra.size(); ++i)
      if (m >> i & 1)
        e.push_back(extra[i]);
    long long x = counter.injective(build_graph(h.order(), e));
    total += (std::popcount(m) % 2 ? -1 : 1) * x;
  }
  return total;
}

// Set partitions of 0..h-1 into classes that are independent in h, given as
// class index per vertex.
inline void for_each_independent_partition(
    const Graph &h, const std::function<void(const std::vector<int> &, int)> &f) {
  const int n = h.order();
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  auto rec = [&](auto &&self, int v, int used) -> void {
    if (v == n) {
      f(cls, used);
      return;
    }
    for (int c = 0; c <= used && c < n; ++c) {
      bool ok = true;
      for (Vertex w : h.neighbors(v))
        if (w < v && cls[w] == c)
          ok = false;
      if (!ok)
        continue;
      cls[v] = c;
      self(self, v + 1, std::max(used, c + 1));
      cls[v] = -1;
    }
  };
  rec(rec, 0, 0);
}

} // namespace detail

inline bool decide_containment(const Graph &g, const Pattern &h,
                               Containment mode,
                               const ColoringOptions &opt = {}) {
  PatternCounter counter(g, h.order(), opt);
  switch (mode) {
  case Containment::subgraph:
    return counter.injective(h.graph()) > 0;
  case Containment::induced:
    return detail::induced_injective(counter, h.graph()) > 0;
  case Containment::hom: {
    bool found = false;
    detail::for_each_independent_partition(
        h.graph(), [&](const std::vector<int> &cls, int k) {
          if (found)
            return;
          EdgeList e;
          for (const auto &[a, b] : h.graph().edges())
            e.emplace_back(cls[a], cls[b]);
          auto q = build_graph(k, e);
          if (counter.injective(q) > 0)
            found = true;
        });
    return found;
  }
  }
  return false;
}

// All graphs on exactly k vertices up to isomorphism, each in a canonical
// labelling; k <= 6.
inline std::vector<Graph> graphs_up_to_iso(int k) {
  if (k < 0 || k > 6)
    throw DomainError("graph enumeration supports orders 0..6");
  std::vector<Edge> pairs;
  for (Vertex a = 0; a < k; ++a)
    for (Vertex b = a + 1; b < k; ++b)
      pairs.emplace_back(a, b);
  const std::size_t m = pairs.size();
  std::vector<std::vector<int>> pair_index(static_cast<std::size_t>(k),
                                           std::vector<int>(k, -1));
  for (std::size_t i = 0; i < m; ++i) {
    pair_index[pairs[i].first][pairs[i].second] = static_cast<int>(i);
    pair_index[pairs[i].second][pairs[i].first] = static_cast<int>(i);
  }
  std::vector<std::vector<Vertex>> perms;
  std::vector<Vertex> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do
    perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    bool canonical = true;
    for (const auto &p : perms) {
      std::uint32_t img = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1)
          img |= 1u << pair_index[p[pairs[i].first]][p[pairs[i].second]];
      if (img < mask) {
        canonical = false;
        break;
      }
    }
    if (!canonical)
      continue;
    EdgeList e;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1)
        e.push_back(pairs[i]);
    out.push_back(build_graph(k, e));
  }
  return out;
}

namespace detail {

// Some induced embedding of h into g by backtracking; vertices of h are
// taken in an order where each one after the first of its component has an
// earlier neighbour.
inline std::optional<std::vector<Vertex>> find_induced(const Graph &g,
                                                       const Graph &h) {
  const int k = h.order();
  std::vector<Vertex> order, anchor(static_cast<std::size_t>(k), -1);
  std::vector<char> taken(static_cast<std::size_t>(k), 0);
  for (Vertex s = 0; s < k; ++s) {
    if (taken[s])
      continue;
    taken[s] = 1;
    std::size_t head = order.size();
    order.push_back(s);
    for (; head < order.size(); ++head)
      for (Vertex w : h.neighbors(order[head]))
        if (!taken[w]) {
          taken[w] = 1;
          anchor[w] = order[head];
          order.push_back(w);
        }
  }
  std::vector<Vertex> phi(static_cast<std::size_t>(k), -1);
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  auto fits = [&](std::size_t i, Vertex x) {
    Vertex a = order[i];
    for (std::size_t j = 0; j < i; ++j) {
      Vertex b = order[j];
      if (h.adjacent(a, b) != g.adjacent(x, phi[b]))
        return false;
    }
    return true;
  };
  auto rec = [&](auto &&self, std::size_t i) -> bool {
    if (i == order.size())
      return true;
    Vertex a = order[i];
    auto attempt = [&](Vertex x) {
      if (used[x] || !fits(i, x))
        return false;
      phi[a] = x;
      used[x] = 1;
      if (self(self, i + 1))
        return true;
      used[x] = 0;
      phi[a] = -1;
      return false;
    };
    if (anchor[a] >= 0) {
      for (Vertex x : g.neighbors(phi[anchor[a]]))
        if (attempt(x))
          return true;
    } else {
      for (Vertex x = 0; x < g.order(); ++x)
        if (attempt(x))
          return true;
    }
    return false;
  };
  if (!rec(rec, 0))
    return std::nullopt;
  return phi;
}

} // namespace detail

// Some X with |X| <= p and pred(G[X]). Candidate graphs are enumerated up to
// isomorphism; existence is decided by induced counting, the witness is then
// located by search. Returns the vertex set ascending.
inline std::optional<std::vector<Vertex>>
exists_small_model(const Graph &g, int p,
                   const std::function<bool(const Graph &)> &pred,
                   const ColoringOptions &opt = {}) {
  if (p < 1 || p > 5)
    throw DomainError("exists_small_model: p must be in 1..5");
  std::optional<PatternCounter> counter;
  for (int k = 1; k <= std::min(p, g.order()); ++k)
    for (const auto &x : graphs_up_to_iso(k)) {
      if (!pred(x))
        continue;
      if (!counter)
        counter.emplace(g, p, opt);
      if (detail::induced_injective(*counter, x) <= 0)
        continue;
      auto phi = detail::find_induced(g, x);
      if (!phi)
        throw std::logic_error("induced copy counted but not found");
      std::sort(phi->begin(), phi->end());
      return phi;
    }
  return std::nullopt;
}

} // namespace gradkit
