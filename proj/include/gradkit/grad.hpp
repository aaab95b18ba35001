#pragma once

// Greatest reduced average density by exhaustive search.
//
// grad(G, r) is the maximum of |E(G/P)| / |P| over families P of pairwise
// disjoint vertex sets, each inducing a connected subgraph of radius <= r.
// This is the ground-truth oracle of the project: exact rationals, bitmask
// enumeration, small inputs only.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gradkit/error.hpp"
#include "gradkit/graph.hpp"
#include "gradkit/rational.hpp"

namespace gradkit {

struct BallFamily {
  std::vector<std::vector<Vertex>> balls;
  std::vector<int> radii; // radius of G[ball], parallel to balls

  int size() const { return static_cast<int>(balls.size()); }
  int radius() const {
    int r = 0;
    for (int x : radii)
      r = std::max(r, x);
    return r;
  }
};

struct GradValue {
  Rational value;
  BallFamily witness;
};

struct GradLimits {
  int max_order_r0 = 16;
  int max_order = 12;
};

// Radius of G[ball] (min over centres of the max distance inside the ball),
// or -1 if the ball is empty or G[ball] is disconnected.
inline int induced_radius(const Graph &g, std::span<const Vertex> ball) {
  if (ball.empty())
    return -1;
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < ball.size(); ++i)
    local[ball[i]] = static_cast<int>(i);
  int best = -1;
  std::vector<int> dist(ball.size());
  std::vector<Vertex> queue;
  for (std::size_t c = 0; c < ball.size(); ++c) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.assign(1, ball[c]);
    dist[c] = 0;
    int ecc = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex w : g.neighbors(v)) {
        int lw = local[w];
        if (lw < 0 || dist[lw] >= 0)
          continue;
        dist[lw] = dist[local[v]] + 1;
        ecc = std::max(ecc, dist[lw]);
        queue.push_back(w);
      }
    }
    if (queue.size() != ball.size())
      return -1;
    if (best < 0 || ecc < best)
      best = ecc;
  }
  return best;
}

// Validates disjointness and connectivity, fills in radii.
inline BallFamily make_family(const Graph &g,
                              std::vector<std::vector<Vertex>> balls) {
  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  BallFamily p;
  for (std::size_t i = 0; i < balls.size(); ++i) {
    for (Vertex v : balls[i]) {
      if (v < 0 || v >= g.order())
        throw InvalidFamilyError("ball " + std::to_string(i + 1) +
                                 " contains vertex outside the graph");
      if (owner[v] >= 0)
        throw InvalidFamilyError("vertex " + std::to_string(v + 1) +
                                 " lies in balls " +
                                 std::to_string(owner[v] + 1) + " and " +
                                 std::to_string(i + 1));
      owner[v] = static_cast<int>(i);
    }
    int r = induced_radius(g, balls[i]);
    if (r < 0)
      throw InvalidFamilyError("ball " + std::to_string(i + 1) +
                               " is empty or does not induce a connected "
                               "subgraph");
    p.radii.push_back(r);
  }
  p.balls = std::move(balls);
  return p;
}

// Graph on {0..|P|-1}; {i, j} is an edge iff some edge of G joins ball i and
// ball j. Re-validates P.
inline Graph quotient(const Graph &g, const BallFamily &p) {
  auto checked = make_family(g, p.balls);
  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < checked.size(); ++i)
    for (Vertex v : checked.balls[i])
      owner[v] = i;
  EdgeList edges;
  for (const auto &[u, v] : g.edges())
    if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v])
      edges.emplace_back(owner[u], owner[v]);
  return build_graph(checked.size(), edges);
}

// |E(G/P)| / |P|: a lower bound on grad(G, radius(P)).
inline Rational evaluate_family(const Graph &g, const BallFamily &p) {
  if (p.balls.empty())
    throw InvalidFamilyError("a ball family needs at least one ball");
  auto q = quotient(g, p);
  return Rational(q.size(), q.order());
}

namespace detail {

using Mask = std::uint32_t;

inline std::vector<Mask> adjacency_masks(const Graph &g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
  for (const auto &[u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

inline std::vector<Vertex> mask_vertices(Mask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// Radius of G[mask] or -1 when disconnected.
inline int mask_radius(const std::vector<Mask> &adj, Mask mask) {
  int best = -1;
  for (Mask rest = mask; rest; rest &= rest - 1) {
    int c = std::countr_zero(rest);
    Mask seen = Mask{1} << c, frontier = seen;
    int ecc = 0;
    while (true) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1)
        next |= adj[std::countr_zero(f)];
      next &= mask & ~seen;
      if (!next)
        break;
      seen |= next;
      frontier = next;
      ++ecc;
    }
    if (seen != mask)
      return -1;
    if (best < 0 || ecc < best)
      best = ecc;
  }
  return best;
}

struct BallSearch {
  struct Ball {
    Mask set;
    Mask touch; // neighbourhood of the ball
  };

  int n = 0;
  std::vector<std::vector<Ball>> by_min; // balls grouped by lowest vertex
  std::vector<Ball> chosen;
  Rational best{-1};
  std::vector<Mask> best_family;

  void run(int next, Mask used, int edges) {
    if (!chosen.empty()) {
      Rational value(edges, static_cast<std::int64_t>(chosen.size()));
      if (value > best) {
        best = value;
        best_family.clear();
        for (const auto &b : chosen)
          best_family.push_back(b.set);
      }
    }
    int v = next;
    while (v < n && (used >> v & 1))
      ++v;
    if (v >= n)
      return;
    run(v + 1, used, edges); // v stays outside every ball
    for (const auto &b : by_min[v]) {
      if (b.set & used)
        continue;
      int gained = 0;
      for (const auto &c : chosen)
        gained += (b.touch & c.set) != 0;
      chosen.push_back(b);
      run(v + 1, used | b.set, edges + gained);
      chosen.pop_back();
    }
  }
};

} // namespace detail

inline GradValue grad(const Graph &g, int r, const GradLimits &limits = {}) {
  if (r < 0)
    throw DomainError("grad: radius must be nonnegative");
  const int n = g.order();
  const int limit = r == 0 ? limits.max_order_r0 : limits.max_order;
  if (n > limit || n > 31)
    throw OracleLimitError("grad oracle limit exceeded: n = " +
                           std::to_string(n) + " > " + std::to_string(limit) +
                           " for r = " + std::to_string(r) +
                           " (use a witness family instead)");
  GradValue out{Rational(0), {}};
  if (n == 0)
    return out;
  auto adj = detail::adjacency_masks(g);
  const detail::Mask full =
      n == 32 ? ~detail::Mask{0} : (detail::Mask{1} << n) - 1;

  if (r == 0) {
    // Singleton balls: the quotient is G[W].
    detail::Mask best_mask = 1;
    Rational best(0);
    for (detail::Mask w = 1; w <= full && w != 0; ++w) {
      int twice = 0;
      for (detail::Mask rest = w; rest; rest &= rest - 1)
        twice += std::popcount(adj[std::countr_zero(rest)] & w);
      Rational value(twice / 2, std::popcount(w));
      if (value > best) {
        best = value;
        best_mask = w;
      }
    }
    std::vector<std::vector<Vertex>> balls;
    for (Vertex v : detail::mask_vertices(best_mask))
      balls.push_back({v});
    return {best, make_family(g, std::move(balls))};
  }

  detail::BallSearch search;
  search.n = n;
  search.by_min.resize(static_cast<std::size_t>(n));
  for (detail::Mask m = 1; m <= full && m != 0; ++m) {
    int rad = detail::mask_radius(adj, m);
    if (rad < 0 || rad > r)
      continue;
    detail::Mask touch = 0;
    for (detail::Mask rest = m; rest; rest &= rest - 1)
      touch |= adj[std::countr_zero(rest)];
    search.by_min[std::countr_zero(m)].push_back({m, touch & ~m});
  }
  search.run(0, 0, 0);
  std::vector<std::vector<Vertex>> balls;
  for (auto m : search.best_family)
    balls.push_back(detail::mask_vertices(m));
  return {search.best, make_family(g, std::move(balls))};
}

} // namespace gradkit
