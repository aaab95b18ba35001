#pragma once

// Transitive-fraternal augmentation.
//
// One step turns a digraph G into H ⊇ G such that for distinct x, y, z:
//   x -> z -> y in G  implies  x -> y in H            (transitivity)
//   x -> z <- y in G  implies  x -> y or y -> x in H  (fraternity)
// Arc weights are path lengths: a new arc gets the sum of the two arcs that
// imply it, and merging always keeps the minimum. Every merge below is a
// per-head stamp scan, so a step costs O(md(G)^2 n).

#include <algorithm>
#include <optional>
#include <vector>

#include "gradkit/graph.hpp"
#include "gradkit/orientation.hpp"

namespace gradkit {

struct AugmentOptions {
  // Weights above the cap are clamped to it. Used by the distance index
  // with cap = k + 1, which cannot change any answer <= k.
  std::optional<int> weight_cap;
  // Candidates heavier than this are discarded instead of merged. A shortest
  // path of length <= k only ever combines arcs of weight <= k, so the
  // distance index can drop everything above its horizon.
  std::optional<int> drop_above;
};

namespace detail {

inline int capped(int w, const AugmentOptions &opt) {
  return opt.weight_cap ? std::min(w, *opt.weight_cap) : w;
}

inline bool dropped(int w, const AugmentOptions &opt) {
  return opt.drop_above && w > *opt.drop_above;
}

// Per-vertex lookup table reset in O(1) by bumping the epoch.
class StampMap {
public:
  explicit StampMap(int n)
      : epoch_of_(static_cast<std::size_t>(n), 0),
        value_(static_cast<std::size_t>(n), 0) {}
  void reset() { ++epoch_; }
  void set(Vertex v, int value) {
    epoch_of_[v] = epoch_;
    value_[v] = value;
  }
  bool has(Vertex v) const { return epoch_of_[v] == epoch_; }
  int get(Vertex v) const { return value_[v]; }

private:
  std::vector<unsigned> epoch_of_;
  std::vector<int> value_;
  unsigned epoch_ = 1;
};

struct WeightedIn {
  Vertex source;
  int weight;
};

// n lists with fixed capacities in one buffer.
class FlatLists {
public:
  explicit FlatLists(const std::vector<int> &capacity)
      : start_(capacity.size() + 1, 0), len_(capacity.size(), 0) {
    for (std::size_t v = 0; v < capacity.size(); ++v)
      start_[v + 1] = start_[v] + capacity[v];
    data_.resize(static_cast<std::size_t>(start_.back()));
  }
  int size(Vertex v) const { return len_[v]; }
  WeightedIn &at(Vertex v, int i) { return data_[start_[v] + i]; }
  const WeightedIn &at(Vertex v, int i) const { return data_[start_[v] + i]; }
  void push(Vertex v, WeightedIn e) { data_[start_[v] + len_[v]++] = e; }

private:
  std::vector<int> start_, len_;
  std::vector<WeightedIn> data_;
};

} // namespace detail

// Candidate arcs x -> v (weight w(x->u) + w(u->v)) for every path
// x -> u -> v with x != v. Duplicates are kept.
inline std::vector<Arc> transitivity_arcs(const ArcListDigraph &g,
                                          const AugmentOptions &opt = {}) {
  std::vector<Arc> out;
  for (Vertex v = 0; v < g.order(); ++v)
    for (const auto &uv : g.in_arcs(v))
      for (const auto &xu : g.in_arcs(uv.source))
        if (xu.source != v && !detail::dropped(xu.weight + uv.weight, opt))
          out.push_back(
              Arc{xu.source, v, detail::capped(xu.weight + uv.weight, opt)});
  return out;
}

// Candidate undirected edges {x, y}, reported as (x, y) with x < y, for every
// pair of arcs x -> v, y -> v. Weight w(x->v) + w(y->v). Duplicates are kept.
inline std::vector<Arc> fraternity_edges(const ArcListDigraph &g,
                                         const AugmentOptions &opt = {}) {
  std::vector<Arc> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto in = g.in_arcs(v);
    for (const auto &a : in)
      for (const auto &b : in)
        if (a.source < b.source && !detail::dropped(a.weight + b.weight, opt))
          out.push_back(Arc{a.source, b.source,
                            detail::capped(a.weight + b.weight, opt)});
  }
  return out;
}

struct StepCounters {
  int arcs = 0;                 // arcs of the resulting digraph
  int max_indegree = 0;         // md of the resulting digraph
  int transitivity_added = 0;   // new ordered pairs from transitivity
  int fraternity_added = 0;     // new arcs from fraternity
  int fraternity_delta_max = 0; // degeneracy bound of the fraternity graph
};

struct StepResult {
  ArcListDigraph digraph;
  StepCounters counters;
};

// Transitivity candidates are merged first; a fraternity candidate {x, y} whose
// pair is already joined (either direction) only lowers the existing weight.
// The remaining fraternity edges are simplified and oriented with orient().
inline StepResult augment_step_traced(const ArcListDigraph &g,
                                      const AugmentOptions &opt = {}) {
  const int n = g.order();
  StepResult result;
  auto &cnt = result.counters;
  detail::StampMap pos(n);

  // Arcs of g plus transitivity, per head. D[v] grows by at most the
  // in-degrees of its in-neighbours.
  std::vector<int> cap(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    cap[v] = g.indegree(v);
    for (const auto &uv : g.in_arcs(v))
      cap[v] += g.indegree(uv.source);
  }
  detail::FlatLists in(cap);
  for (Vertex v = 0; v < n; ++v) {
    pos.reset();
    for (const auto &a : g.in_arcs(v)) {
      pos.set(a.source, in.size(v));
      in.push(v, {a.source, a.weight});
    }
    for (const auto &uv : g.in_arcs(v))
      for (const auto &xu : g.in_arcs(uv.source)) {
        Vertex x = xu.source;
        if (x == v || detail::dropped(xu.weight + uv.weight, opt))
          continue;
        int w = detail::capped(xu.weight + uv.weight, opt);
        if (pos.has(x)) {
          auto &e = in.at(v, pos.get(x));
          e.weight = std::min(e.weight, w);
        } else {
          pos.set(x, in.size(v));
          in.push(v, {x, w});
          ++cnt.transitivity_added;
        }
      }
  }

  // Fraternity candidates, bucketed by smaller and by larger endpoint.
  auto cand = fraternity_edges(g, opt);
  std::vector<int> by_low_start(static_cast<std::size_t>(n) + 1, 0),
      by_high_start(static_cast<std::size_t>(n) + 1, 0);
  for (const auto &c : cand) {
    ++by_low_start[c.from + 1];
    ++by_high_start[c.to + 1];
  }
  for (int i = 0; i < n; ++i) {
    by_low_start[i + 1] += by_low_start[i];
    by_high_start[i + 1] += by_high_start[i];
  }
  std::vector<int> by_low(cand.size()), by_high(cand.size());
  {
    std::vector<int> cl(by_low_start.begin(), by_low_start.end() - 1);
    std::vector<int> ch(by_high_start.begin(), by_high_start.end() - 1);
    for (std::size_t i = 0; i < cand.size(); ++i) {
      by_low[cl[cand[i].from]++] = static_cast<int>(i);
      by_high[ch[cand[i].to]++] = static_cast<int>(i);
    }
  }
  std::vector<char> joined(cand.size(), 0);
  // y -> x with x the smaller endpoint.
  for (Vertex x = 0; x < n; ++x) {
    if (by_low_start[x] == by_low_start[x + 1])
      continue;
    pos.reset();
    for (int i = 0; i < in.size(x); ++i)
      pos.set(in.at(x, i).source, i);
    for (int k = by_low_start[x]; k < by_low_start[x + 1]; ++k) {
      const auto &c = cand[by_low[k]];
      if (pos.has(c.to)) {
        auto &e = in.at(x, pos.get(c.to));
        e.weight = std::min(e.weight, c.weight);
        joined[by_low[k]] = 1;
      }
    }
  }
  // x -> y with y the larger endpoint.
  for (Vertex y = 0; y < n; ++y) {
    if (by_high_start[y] == by_high_start[y + 1])
      continue;
    pos.reset();
    for (int i = 0; i < in.size(y); ++i)
      pos.set(in.at(y, i).source, i);
    for (int k = by_high_start[y]; k < by_high_start[y + 1]; ++k) {
      const auto &c = cand[by_high[k]];
      if (pos.has(c.from)) {
        auto &e = in.at(y, pos.get(c.from));
        e.weight = std::min(e.weight, c.weight);
        joined[by_high[k]] = 1;
      }
    }
  }

  // Fresh fraternity pairs: simplify with min weight, symmetric lookup lists.
  for (Vertex v = 0; v < n; ++v)
    cap[v] = by_low_start[v + 1] - by_low_start[v] + by_high_start[v + 1] -
             by_high_start[v];
  detail::FlatLists fresh(cap);
  EdgeList fresh_edges;
  for (Vertex x = 0; x < n; ++x) {
    pos.reset();
    const int own_begin = fresh.size(x);
    for (int k = by_low_start[x]; k < by_low_start[x + 1]; ++k) {
      const auto &c = cand[by_low[k]];
      if (joined[by_low[k]])
        continue;
      if (pos.has(c.to)) {
        auto &e = fresh.at(x, pos.get(c.to));
        e.weight = std::min(e.weight, c.weight);
      } else {
        pos.set(c.to, fresh.size(x));
        fresh.push(x, {c.to, c.weight});
      }
    }
    for (int i = own_begin; i < fresh.size(x); ++i) {
      const auto e = fresh.at(x, i);
      fresh_edges.emplace_back(x, e.source);
      fresh.push(e.source, {x, e.weight});
    }
  }
  auto fresh_graph = build_graph(n, fresh_edges);
  auto fresh_orient = orient(fresh_graph);
  cnt.fraternity_delta_max = fresh_orient.order.delta_max;

  // Every pair is unique by now, so the lists are filled directly. D[v] is
  // the old arcs in id order, then transitivity arcs, then fraternity arcs;
  // new ids continue after the old ones in that order.
  std::vector<int> offset(static_cast<std::size_t>(n) + 1, 0);
  int transitive = 0;
  for (Vertex v = 0; v < n; ++v) {
    offset[v + 1] = in.size(v) + fresh_orient.digraph.indegree(v);
    transitive += in.size(v) - g.indegree(v);
  }
  for (int v = 0; v < n; ++v)
    offset[v + 1] += offset[v];
  std::vector<InArc> entries(static_cast<std::size_t>(offset[n]));
  int next_t = g.arc_count(), next_f = g.arc_count() + transitive;
  for (Vertex v = 0; v < n; ++v) {
    auto old = g.in_arcs(v);
    const int kept = static_cast<int>(old.size());
    int at = offset[v];
    for (int i = 0; i < kept; ++i)
      entries[at++] = InArc{old[i].source, old[i].id, in.at(v, i).weight};
    for (int i = kept; i < in.size(v); ++i)
      entries[at++] = InArc{in.at(v, i).source, ++next_t, in.at(v, i).weight};
    auto oriented = fresh_orient.digraph.in_arcs(v);
    if (oriented.empty())
      continue;
    pos.reset();
    for (int i = 0; i < fresh.size(v); ++i)
      pos.set(fresh.at(v, i).source, fresh.at(v, i).weight);
    for (const auto &f : oriented) {
      entries[at++] = InArc{f.source, 0, pos.get(f.source)};
      ++cnt.fraternity_added;
    }
  }
  // Fraternity ids go by head, then by position in the oriented list.
  for (Vertex v = 0; v < n; ++v)
    for (int k = offset[v + 1] - fresh_orient.digraph.indegree(v);
         k < offset[v + 1]; ++k)
      entries[k].id = ++next_f;
  result.digraph =
      ArcListDigraph::from_lists(std::move(offset), std::move(entries));
  cnt.arcs = result.digraph.arc_count();
  cnt.max_indegree = result.digraph.max_indegree();
  return result;
}

inline ArcListDigraph augment_step(const ArcListDigraph &g,
                                   const AugmentOptions &opt = {}) {
  return augment_step_traced(g, opt).digraph;
}

struct AugmentationTrace {
  DegeneracyOrder base_order;
  std::vector<ArcListDigraph> steps;  // G_1 .. G_c
  std::vector<StepCounters> counters; // counters[i] describes steps[i]
};

// G_1 = orient(G) with unit weights, G_{i+1} = augment_step(G_i).
inline AugmentationTrace augment(const Graph &g, int c,
                                 const AugmentOptions &opt = {}) {
  if (c < 1)
    throw DomainError("augment: step count must be at least 1");
  AugmentationTrace trace;
  auto base = orient(g);
  trace.base_order = std::move(base.order);
  StepCounters first;
  first.arcs = base.digraph.arc_count();
  first.max_indegree = base.digraph.max_indegree();
  trace.steps.push_back(std::move(base.digraph));
  trace.counters.push_back(first);
  for (int i = 1; i < c; ++i) {
    auto step = augment_step_traced(trace.steps.back(), opt);
    trace.steps.push_back(std::move(step.digraph));
    trace.counters.push_back(step.counters);
  }
  return trace;
}

} // namespace gradkit
