#pragma once

// Test corpus, brute-force oracles and timing helpers.
//
// The oracles only use graph-core; none of them shares code with the
// algorithms they are compared against.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gradkit/error.hpp"
#include "gradkit/generators.hpp"
#include "gradkit/graph.hpp"

namespace gradkit {

struct CorpusEntry {
  GeneratorSpec spec;
  Graph graph;
};

namespace detail {

inline GeneratorSpec gen_spec(std::string family, std::vector<long long> params,
                              std::shared_ptr<const GeneratorSpec> base = {}) {
  return {std::move(family), std::move(params), std::move(base)};
}

} // namespace detail

// Every generator family with order <= max_n, plus five seeds of random
// 2-, 3- and 4-regular graphs per order. Cliques stop at 12 vertices.
inline std::vector<CorpusEntry> small_corpus(int max_n) {
  using detail::gen_spec;
  std::vector<GeneratorSpec> specs;
  for (int n = 1; n <= max_n; ++n)
    specs.push_back(gen_spec("path", {n}));
  for (int n = 3; n <= max_n; ++n)
    specs.push_back(gen_spec("cycle", {n}));
  for (int n = 1; n <= std::min(max_n, 12); ++n)
    specs.push_back(gen_spec("clique", {n}));
  for (int m = 1; m + 1 <= max_n; ++m)
    specs.push_back(gen_spec("star", {m}));
  for (int n = 1; n <= std::min(max_n, 6); ++n)
    specs.push_back(gen_spec("empty", {n}));
  for (int a = 1; a * a <= max_n; ++a)
    for (int b = a; a * b <= max_n; ++b)
      specs.push_back(gen_spec("grid", {a, b}));
  for (int q = 3; q <= 6; ++q)
    for (int t = 1; q + t * q * (q - 1) / 2 <= max_n; ++t)
      specs.push_back(gen_spec("subdivided_clique", {q, t}));
  for (int c = 2; c <= 3; ++c) {
    for (int a = 1; a * c <= max_n; ++a)
      specs.push_back(gen_spec(
          "lex_product", {c},
          std::make_shared<GeneratorSpec>(gen_spec("path", {a}))));
    for (int a = 3; a * c <= max_n; ++a)
      specs.push_back(gen_spec(
          "lex_product", {c},
          std::make_shared<GeneratorSpec>(gen_spec("cycle", {a}))));
    for (int m = 1; (m + 1) * c <= max_n; ++m)
      specs.push_back(gen_spec(
          "lex_product", {c},
          std::make_shared<GeneratorSpec>(gen_spec("star", {m}))));
  }
  for (int d = 2; d <= 4; ++d)
    for (int n = d + 1; n <= max_n; ++n)
      if (n * d % 2 == 0)
        for (int seed = 1; seed <= 5; ++seed)
          specs.push_back(gen_spec("random_regular", {n, d, seed}));
  std::vector<CorpusEntry> out;
  out.reserve(specs.size());
  for (auto &s : specs) {
    Graph g = generate(s);
    out.push_back({std::move(s), std::move(g)});
  }
  return out;
}

constexpr int kUnreachable = -1;

// dist[u][v], kUnreachable for different components.
inline std::vector<std::vector<int>> bfs_all_pairs(const Graph &g) {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex s = 0; s < g.order(); ++s)
    out.push_back(bfs_distances(g, s));
  return out;
}

namespace detail {

inline bool next_subset(std::vector<int> &idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == n - k + i)
    --i;
  if (i < 0)
    return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j)
    idx[j] = idx[j - 1] + 1;
  return true;
}

inline long long brute_automorphisms(const Graph &h) {
  const int k = h.order();
  std::vector<int> perm(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    perm[i] = i;
  long long count = 0;
  do {
    bool ok = true;
    for (const auto &[a, b] : h.edges())
      if (!h.adjacent(perm[a], perm[b])) {
        ok = false;
        break;
      }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

} // namespace detail

// Number of subgraphs of g isomorphic to h, optionally only those meeting s.
// Enumerates h-subsets and the bijections onto them.
inline long long brute_count(const Graph &g, const Graph &h,
                             const std::vector<Vertex> *s = nullptr) {
  const int n = g.order(), k = h.order();
  if (k == 0)
    return 1;
  if (k > n)
    return 0;
  std::vector<char> in_s(static_cast<std::size_t>(n), s == nullptr);
  if (s)
    for (Vertex v : *s)
      in_s.at(v) = 1;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    idx[i] = i;
  std::vector<int> perm(static_cast<std::size_t>(k));
  long long maps = 0;
  do {
    bool hit = false;
    for (int i : idx)
      hit = hit || in_s[i];
    if (!hit)
      continue;
    for (int i = 0; i < k; ++i)
      perm[i] = i;
    do {
      bool ok = true;
      for (const auto &[a, b] : h.edges())
        if (!g.adjacent(idx[perm[a]], idx[perm[b]])) {
          ok = false;
          break;
        }
      maps += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (detail::next_subset(idx, n));
  return maps / detail::brute_automorphisms(h);
}

enum class BruteMode { hom, subgraph, induced };

// Exhaustive map search from h into g.
inline bool brute_contains(const Graph &g, const Graph &h, BruteMode mode) {
  const int n = g.order(), k = h.order();
  if (k == 0)
    return true;
  if (mode != BruteMode::hom && k > n)
    return false;
  std::vector<int> image(static_cast<std::size_t>(k), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto &&self, int i) -> bool {
    if (i == k)
      return true;
    for (Vertex v = 0; v < n; ++v) {
      if (mode != BruteMode::hom && used[v])
        continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        bool he = h.adjacent(i, j), ge = g.adjacent(v, image[j]);
        if (he && !ge)
          ok = false;
        if (mode == BruteMode::induced && !he && ge)
          ok = false;
      }
      if (!ok)
        continue;
      image[i] = v;
      used[v] = 1;
      if (self(self, i + 1))
        return true;
      used[v] = 0;
    }
    image[i] = -1;
    return false;
  };
  return rec(rec, 0);
}

// Vertices on a longest simple path (0 for the empty graph).
inline int longest_path(const Graph &g, int limit = 14) {
  const int n = g.order();
  if (n > limit || n > 24)
    throw OracleLimitError("longest-path oracle limit exceeded: n = " +
                           std::to_string(n) + " > " +
                           std::to_string(std::min(limit, 24)));
  if (n == 0)
    return 0;
  // reach[mask] = set of end vertices of paths covering exactly mask
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  int best = 1;
  for (Vertex v = 0; v < n; ++v)
    reach[std::size_t{1} << v] = 1u << v;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!reach[mask])
      continue;
    best = std::max(best, std::popcount(mask));
    for (std::uint32_t ends = reach[mask]; ends; ends &= ends - 1) {
      Vertex v = std::countr_zero(ends);
      for (Vertex w : g.neighbors(v))
        if (!(mask >> w & 1))
          reach[mask | 1u << w] |= 1u << w;
    }
  }
  return best;
}

// Exact tree-depth by the subset recursion over all 2^n vertex sets.
inline int brute_treedepth(const Graph &g, int limit = 16) {
  const int n = g.order();
  if (n > limit || n > 24)
    throw OracleLimitError("brute tree-depth limit exceeded: n = " +
                           std::to_string(n));
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const auto &[u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  std::vector<std::uint8_t> td(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    std::uint32_t seen = s & (~s + 1), frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1)
        next |= adj[std::countr_zero(f)];
      next &= s & ~seen;
      seen |= next;
      frontier = next;
    }
    if (seen != s) {
      td[s] = std::max(td[seen], td[s & ~seen]);
      continue;
    }
    int best = 255;
    for (std::uint32_t r = s; r; r &= r - 1)
      best = std::min(best, 1 + td[s & ~(r & (~r + 1))]);
    td[s] = static_cast<std::uint8_t>(best);
  }
  return td[(std::size_t{1} << n) - 1];
}

// Triples breaking the closure rules between consecutive augmentation steps:
// arcs x->z->y must give x->y, arcs x->z, y->z must give x->y or y->x, and
// every arc of `before` must persist with a weight no larger.
inline long long closure_violations(const ArcListDigraph &before,
                                    const ArcListDigraph &after) {
  const int n = before.order();
  long long bad = 0;
  std::vector<std::vector<Arc>> out(static_cast<std::size_t>(n));
  for (const auto &a : before.arcs())
    out[a.from].push_back(a);
  for (const auto &a : before.arcs()) {
    auto w = has_arc(after, a.from, a.to);
    if (!w || *w > a.weight)
      ++bad;
  }
  for (Vertex z = 0; z < n; ++z) {
    auto in = before.in_arcs(z);
    for (const auto &xz : in) {
      for (const auto &zy : out[z])
        if (zy.to != xz.source && !has_arc(after, xz.source, zy.to))
          ++bad;
      for (const auto &yz : in)
        if (yz.source != xz.source && !has_arc(after, xz.source, yz.source) &&
            !has_arc(after, yz.source, xz.source))
          ++bad;
    }
  }
  return bad;
}

// 64-bit FNV-1a, as 16 hex digits.
inline std::string digest(const std::string &text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct OracleReport {
  std::string id;
  std::string spec;
  std::string algorithm_digest;
  std::string oracle_digest;
  bool match = false;
  double algorithm_seconds = 0;
  double oracle_seconds = 0;
};

inline OracleReport make_report(std::string id, std::string spec,
                                const std::string &algorithm_output,
                                const std::string &oracle_output,
                                double algorithm_seconds = 0,
                                double oracle_seconds = 0) {
  OracleReport r;
  r.id = std::move(id);
  r.spec = std::move(spec);
  r.algorithm_digest = digest(algorithm_output);
  r.oracle_digest = digest(oracle_output);
  r.match = r.algorithm_digest == r.oracle_digest;
  r.algorithm_seconds = algorithm_seconds;
  r.oracle_seconds = oracle_seconds;
  return r;
}

inline std::string format_report(const OracleReport &r) {
  char times[64];
  std::snprintf(times, sizeof times, "%.6f %.6f", r.algorithm_seconds,
                r.oracle_seconds);
  return std::string(r.match ? "PASS " : "FAIL ") + r.id + " [" + r.spec +
         "] " + r.algorithm_digest + " " + r.oracle_digest + " " + times;
}

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

struct ScalingRow {
  long long parameter = 0;
  int n = 0, m = 0;
  double seconds = 0; // best of the repeats
};

struct ScalingTable {
  std::vector<ScalingRow> rows;
  // Least-squares slope of log(seconds) against log(n + m); NaN with fewer
  // than two rows.
  double exponent = std::numeric_limits<double>::quiet_NaN();
};

inline double fit_exponent(const std::vector<double> &x,
                           const std::vector<double> &y) {
  const std::size_t k = x.size();
  if (k < 2)
    return std::numeric_limits<double>::quiet_NaN();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < k; ++i) {
    double lx = std::log(x[i]), ly = std::log(std::max(y[i], 1e-9));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double den = k * sxx - sx * sx;
  if (den == 0)
    return std::numeric_limits<double>::quiet_NaN();
  return (k * sxy - sx * sy) / den;
}

inline ScalingTable scaling_run(const std::vector<long long> &sizes,
                                const std::function<Graph(long long)> &make,
                                const std::function<void(const Graph &)> &op,
                                int repeats = 3) {
  ScalingTable t;
  std::vector<double> x, y;
  for (long long s : sizes) {
    Graph g = make(s);
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < std::max(1, repeats); ++i) {
      Stopwatch w;
      op(g);
      best = std::min(best, w.seconds());
    }
    t.rows.push_back({s, g.order(), g.size(), best});
    x.push_back(static_cast<double>(g.order()) + g.size());
    y.push_back(best);
  }
  t.exponent = fit_exponent(x, y);
  return t;
}

} // namespace gradkit
