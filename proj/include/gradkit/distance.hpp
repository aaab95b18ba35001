#pragma once

// Bounded-distance queries after augmentation.
//
// After enough weighted augmentation steps every pair at distance d <= k is
// either joined by an arc of weight d or has a common in-neighbour z with
// w(z->x) + w(z->y) = d, and no arc weight ever undercuts a real distance.
// A query therefore only scans D[x] and D[y].

#include <algorithm>
#include <limits>
#include <optional>
#include <vector>

#include "gradkit/augmentation.hpp"
#include "gradkit/graph.hpp"

namespace gradkit {

// Exact(d) or Beyond (distance greater than the horizon).
class DistanceAnswer {
public:
  static DistanceAnswer exact(int d) { return DistanceAnswer(d); }
  static DistanceAnswer beyond() { return DistanceAnswer(-1); }

  bool is_exact() const { return value_ >= 0; }
  bool is_beyond() const { return value_ < 0; }
  int distance() const { return value_; }

  friend bool operator==(const DistanceAnswer &, const DistanceAnswer &) =
      default;

private:
  explicit DistanceAnswer(int v) : value_(v) {}
  int value_;
};

struct DistanceIndex {
  int k = 0;
  int steps = 0; // augmentation steps applied on top of the orientation
  ArcListDigraph arcs;
  int max_indegree = 0;
};

// Mark buffer for the common in-neighbour scan. One per execution context.
class QueryScratch {
public:
  explicit QueryScratch(int n = 0)
      : epoch_of_(static_cast<std::size_t>(n), 0),
        weight_(static_cast<std::size_t>(n), 0) {}

  void ensure(int n) {
    if (static_cast<int>(epoch_of_.size()) < n) {
      epoch_of_.assign(static_cast<std::size_t>(n), 0);
      weight_.assign(static_cast<std::size_t>(n), 0);
      epoch_ = 0;
    }
  }

private:
  friend DistanceAnswer query(const DistanceIndex &, Vertex, Vertex,
                              QueryScratch &);
  std::vector<unsigned> epoch_of_;
  std::vector<int> weight_;
  unsigned epoch_ = 0;
};

// k weighted augmentation steps by default; `steps` overrides the count for
// experiments (k - 1 steps are already enough for exact answers).
inline DistanceIndex preprocess(const Graph &g, int k,
                                std::optional<int> steps = std::nullopt) {
  if (k < 1)
    throw DomainError("distance index: horizon k must be at least 1");
  DistanceIndex idx;
  idx.k = k;
  idx.steps = steps.value_or(k);
  if (idx.steps < 0)
    throw DomainError("distance index: negative step count");
  AugmentOptions opt{k + 1, k};
  idx.arcs = orient(g).digraph;
  for (int i = 0; i < idx.steps; ++i)
    idx.arcs = augment_step(idx.arcs, opt);
  idx.max_indegree = idx.arcs.max_indegree();
  return idx;
}

inline DistanceAnswer query(const DistanceIndex &idx, Vertex x, Vertex y,
                            QueryScratch &scratch) {
  if (x == y)
    return DistanceAnswer::exact(0);
  constexpr int inf = std::numeric_limits<int>::max();
  int best = inf;
  scratch.ensure(idx.arcs.order());
  if (++scratch.epoch_ == 0) {
    std::fill(scratch.epoch_of_.begin(), scratch.epoch_of_.end(), 0);
    scratch.epoch_ = 1;
  }
  for (const auto &a : idx.arcs.in_arcs(x)) {
    if (a.source == y)
      best = std::min(best, a.weight);
    scratch.epoch_of_[a.source] = scratch.epoch_;
    scratch.weight_[a.source] = a.weight;
  }
  for (const auto &a : idx.arcs.in_arcs(y)) {
    if (a.source == x)
      best = std::min(best, a.weight);
    else if (scratch.epoch_of_[a.source] == scratch.epoch_)
      best = std::min(best, scratch.weight_[a.source] + a.weight);
  }
  if (best <= idx.k)
    return DistanceAnswer::exact(best);
  return DistanceAnswer::beyond();
}

inline DistanceAnswer query(const DistanceIndex &idx, Vertex x, Vertex y) {
  QueryScratch scratch(idx.arcs.order());
  return query(idx, x, y, scratch);
}

} // namespace gradkit
