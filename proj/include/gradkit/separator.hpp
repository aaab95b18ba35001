#pragma once

// Balanced separators or shallow clique minors, with certificates.
//
// separate_or_minor(G, l, h) keeps a separator S and pairwise adjacent
// branch sets B_1..B_k inside the current large component C. It grows a
// breadth-first ball in C from its lowest vertex; if the ball touches every
// B_i within radius l*log2(n) the shortest paths to them form B_{k+1},
// otherwise a thin layer of the ball joins S. Once no component exceeds
// ceil(2n/3) it returns S together with the branch sets, unless the branch
// sets can still be completed to K_h.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gradkit/error.hpp"
#include "gradkit/grad.hpp"
#include "gradkit/graph.hpp"
#include "gradkit/rational.hpp"

namespace gradkit {

struct SeparatorCertificate {
  std::vector<Vertex> separator; // ascending
  int largest_component = 0;     // order of the largest component of G - S
  double size_bound = 0;         // C1 * (n/l + 4 l h^2 log2 n)
};

struct PairCertificate {
  int i = 0, j = 0; // branch set indices, i < j
  Edge edge;        // edge.first in set i, edge.second in set j
};

struct MinorCertificate {
  std::vector<std::vector<Vertex>> branch_sets; // each ascending
  std::vector<int> radii;
  std::vector<PairCertificate> adjacency;
};

struct SeparatorOutcome {
  std::variant<SeparatorCertificate, MinorCertificate> value;

  bool is_separator() const {
    return std::holds_alternative<SeparatorCertificate>(value);
  }
  const SeparatorCertificate &separator() const {
    return std::get<SeparatorCertificate>(value);
  }
  const MinorCertificate &minor() const {
    return std::get<MinorCertificate>(value);
  }
};

struct SeparatorOptions {
  double c1 = 4.0; // constant of the separator size bound
};

inline double log2n(int n) { return n > 1 ? std::log2(static_cast<double>(n)) : 0.0; }

inline double separator_size_bound(int n, int l, int h, double c1 = 4.0) {
  return c1 * (static_cast<double>(n) / l +
               4.0 * l * static_cast<double>(h) * h * log2n(n));
}

inline int balance_limit(int n) { return (2 * n + 2) / 3; } // ceil(2n/3)

namespace detail {

class SeparatorSearch {
public:
  SeparatorSearch(const Graph &g, int l, int h)
      : g_(g), n_(g.order()), h_(h), l_(l),
        radius_(static_cast<int>(std::floor(l * log2n(g.order()) + 1e-9))),
        state_(static_cast<std::size_t>(g.order()), kFree) {}

  SeparatorOutcome run(double bound) {
    while (true) {
      auto comps = free_components();
      std::size_t big = 0;
      for (std::size_t i = 1; i < comps.size(); ++i)
        if (comps[i].size() > comps[big].size())
          big = i;
      if (comps.empty() ||
          static_cast<int>(comps[big].size()) <= balance_limit(n_)) {
        if (auto minor = try_complete())
          return {*minor};
        return {separator_certificate(bound)};
      }
      const auto &c = comps[big];
      // Everything outside C is final.
      std::vector<char> in_c(static_cast<std::size_t>(n_), 0);
      for (Vertex v : c)
        in_c[v] = 1;
      for (Vertex v = 0; v < n_; ++v)
        if (state_[v] == kFree && !in_c[v])
          state_[v] = kDead;
      drop_sets_not_touching(in_c);
      if (grow(c, in_c))
        if (static_cast<int>(sets_.size()) == h_)
          return {minor_certificate()};
    }
  }

private:
  static constexpr int kFree = -1, kSep = -2, kDead = -3; // else set index

  std::vector<std::vector<Vertex>> free_components() const {
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (Vertex s = 0; s < n_; ++s) {
      if (state_[s] != kFree || seen[s])
        continue;
      out.emplace_back(1, s);
      seen[s] = 1;
      auto &comp = out.back();
      for (std::size_t i = 0; i < comp.size(); ++i)
        for (Vertex w : g_.neighbors(comp[i]))
          if (state_[w] == kFree && !seen[w]) {
            seen[w] = 1;
            comp.push_back(w);
          }
      std::sort(comp.begin(), comp.end());
    }
    return out;
  }

  void renumber() {
    for (Vertex v = 0; v < n_; ++v)
      if (state_[v] >= 0)
        state_[v] = kFree; // placeholder, reassigned below
    for (std::size_t i = 0; i < sets_.size(); ++i)
      for (Vertex v : sets_[i])
        state_[v] = static_cast<int>(i);
  }

  void drop_sets_not_touching(const std::vector<char> &in_c) {
    std::vector<std::vector<Vertex>> kept;
    std::vector<PairCertificate> kept_pairs;
    std::vector<int> new_index(sets_.size(), -1);
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      bool touches = false;
      for (Vertex v : sets_[i]) {
        for (Vertex w : g_.neighbors(v))
          if (in_c[w]) {
            touches = true;
            break;
          }
        if (touches)
          break;
      }
      if (touches) {
        new_index[i] = static_cast<int>(kept.size());
        kept.push_back(std::move(sets_[i]));
      } else {
        for (Vertex v : sets_[i])
          state_[v] = kDead;
      }
    }
    for (const auto &p : pairs_)
      if (new_index[p.i] >= 0 && new_index[p.j] >= 0)
        kept_pairs.push_back({new_index[p.i], new_index[p.j], p.edge});
    sets_ = std::move(kept);
    pairs_ = std::move(kept_pairs);
    renumber();
  }

  struct Ball {
    std::vector<int> dist;
    std::vector<Vertex> pred;
    std::vector<std::vector<Vertex>> layers;
    std::vector<Vertex> contact; // per set: closest vertex of C next to it
    int reached_at = -1;         // radius at which every set was touched
  };

  Ball bfs(Vertex v, const std::vector<char> &in_c) const {
    Ball b;
    b.dist.assign(static_cast<std::size_t>(n_), -1);
    b.pred.assign(static_cast<std::size_t>(n_), -1);
    b.contact.assign(sets_.size(), -1);
    std::size_t touched = 0;
    b.dist[v] = 0;
    b.layers.push_back({v});
    for (int j = 0;; ++j) {
      for (Vertex x : b.layers[j])
        for (Vertex w : g_.neighbors(x))
          if (state_[w] >= 0 && b.contact[state_[w]] < 0) {
            b.contact[state_[w]] = x;
            ++touched;
          }
      if (touched == sets_.size()) {
        b.reached_at = j;
        return b;
      }
      if (j == radius_)
        return b;
      std::vector<Vertex> next;
      for (Vertex x : b.layers[j])
        for (Vertex w : g_.neighbors(x))
          if (in_c[w] && state_[w] == kFree && b.dist[w] < 0) {
            b.dist[w] = j + 1;
            b.pred[w] = x;
            next.push_back(w);
          }
      if (next.empty())
        return b;
      b.layers.push_back(std::move(next));
    }
  }

  // Adds a branch set (true) or a separator layer (false) inside C.
  bool grow(const std::vector<Vertex> &c, const std::vector<char> &in_c) {
    Vertex v = c.front();
    auto b = bfs(v, in_c);
    if (b.reached_at >= 0) {
      add_set(v, b);
      return true;
    }
    // Cut a layer L_j with |L_j| <= |ball(j-1)| / l, else the thinnest.
    std::size_t inner = b.layers[0].size();
    int pick = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    int best = -1;
    for (std::size_t j = 1; j < b.layers.size(); ++j) {
      double ratio = static_cast<double>(b.layers[j].size()) / inner;
      if (pick < 0 && ratio * l_ <= 1.0)
        pick = static_cast<int>(j);
      if (ratio < best_ratio) {
        best_ratio = ratio;
        best = static_cast<int>(j);
      }
      inner += b.layers[j].size();
    }
    if (pick < 0)
      pick = best;
    if (pick < 0) {
      // Single-vertex ball that touches nothing: make it a separator vertex.
      state_[v] = kSep;
      return false;
    }
    for (Vertex x : b.layers[pick])
      state_[x] = kSep;
    return false;
  }

  void add_set(Vertex v, const Ball &b) {
    const int index = static_cast<int>(sets_.size());
    std::vector<Vertex> set{v};
    state_[v] = index;
    for (std::size_t i = 0; i < b.contact.size(); ++i) {
      for (Vertex x = b.contact[i]; x != v && state_[x] != index;
           x = b.pred[x]) {
        state_[x] = index;
        set.push_back(x);
      }
      // Certificate edge from the contact vertex into set i.
      Vertex x = b.contact[i], y = -1;
      for (Vertex w : g_.neighbors(x))
        if (state_[w] == static_cast<int>(i)) {
          y = w;
          break;
        }
      pairs_.push_back({static_cast<int>(i), index, Edge{y, x}});
    }
    std::sort(set.begin(), set.end());
    sets_.push_back(std::move(set));
  }

  // Greedy attempt to finish K_h from the current sets using the free
  // vertices, without touching the recorded state if it fails.
  std::optional<MinorCertificate> try_complete() {
    auto saved_state = state_;
    auto saved_sets = sets_;
    auto saved_pairs = pairs_;
    while (static_cast<int>(sets_.size()) < h_) {
      bool added = false;
      for (const auto &comp : free_components()) {
        std::vector<char> in_c(static_cast<std::size_t>(n_), 0);
        for (Vertex v : comp)
          in_c[v] = 1;
        auto b = bfs(comp.front(), in_c);
        if (b.reached_at >= 0) {
          add_set(comp.front(), b);
          added = true;
          break;
        }
      }
      if (!added)
        break;
    }
    std::optional<MinorCertificate> out;
    if (static_cast<int>(sets_.size()) == h_)
      out = minor_certificate();
    state_ = std::move(saved_state);
    sets_ = std::move(saved_sets);
    pairs_ = std::move(saved_pairs);
    return out;
  }

  SeparatorCertificate separator_certificate(double bound) const {
    SeparatorCertificate s;
    std::vector<char> cut(static_cast<std::size_t>(n_), 0);
    for (Vertex v = 0; v < n_; ++v)
      if (state_[v] == kSep || state_[v] >= 0) {
        s.separator.push_back(v);
        cut[v] = 1;
      }
    s.largest_component = largest_component_without(g_, cut);
    s.size_bound = bound;
    return s;
  }

  MinorCertificate minor_certificate() const {
    MinorCertificate m;
    m.branch_sets = sets_;
    for (const auto &set : sets_)
      m.radii.push_back(induced_radius(g_, set));
    m.adjacency = pairs_;
    std::sort(m.adjacency.begin(), m.adjacency.end(),
              [](const PairCertificate &a, const PairCertificate &b) {
                return std::pair(a.i, a.j) < std::pair(b.i, b.j);
              });
    return m;
  }

public:
  static int largest_component_without(const Graph &g,
                                       const std::vector<char> &cut) {
    const int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> queue;
    int best = 0;
    for (Vertex s = 0; s < n; ++s) {
      if (cut[s] || seen[s])
        continue;
      seen[s] = 1;
      queue.assign(1, s);
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (Vertex w : g.neighbors(queue[i]))
          if (!cut[w] && !seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
      best = std::max(best, static_cast<int>(queue.size()));
    }
    return best;
  }

private:
  const Graph &g_;
  int n_, h_;
  double l_;
  int radius_;
  std::vector<int> state_;
  std::vector<std::vector<Vertex>> sets_;
  std::vector<PairCertificate> pairs_;
};

} // namespace detail

inline SeparatorOutcome separate_or_minor(const Graph &g, int l, int h,
                                          const SeparatorOptions &opt = {}) {
  if (l < 1)
    throw DomainError("separate_or_minor: l must be at least 1");
  if (h < 2)
    throw DomainError("separate_or_minor: h must be at least 2");
  if (!is_connected(g))
    throw DomainError("separate_or_minor: graph must be connected");
  detail::SeparatorSearch search(g, l, h);
  return search.run(separator_size_bound(g.order(), l, h, opt.c1));
}

// Reason o is not a valid outcome for (g, l, h), or nullopt.
inline std::optional<std::string>
outcome_error(const Graph &g, const SeparatorOutcome &o, int l, int h,
              const SeparatorOptions &opt = {}) {
  const int n = g.order();
  if (o.is_separator()) {
    const auto &s = o.separator();
    std::vector<char> cut(static_cast<std::size_t>(n), 0);
    for (Vertex v : s.separator) {
      if (v < 0 || v >= n)
        return std::string("separator vertex outside the graph");
      if (cut[v])
        return std::string("separator repeats a vertex");
      cut[v] = 1;
    }
    int largest = detail::SeparatorSearch::largest_component_without(g, cut);
    if (largest > balance_limit(n))
      return "component of " + std::to_string(largest) +
             " vertices exceeds ceil(2n/3) = " +
             std::to_string(balance_limit(n));
    double bound = separator_size_bound(n, l, h, opt.c1);
    if (static_cast<double>(s.separator.size()) > bound + 1e-9)
      return "separator size " + std::to_string(s.separator.size()) +
             " exceeds the bound " + std::to_string(bound);
    return std::nullopt;
  }
  const auto &m = o.minor();
  if (static_cast<int>(m.branch_sets.size()) != h)
    return "minor has " + std::to_string(m.branch_sets.size()) +
           " branch sets, expected " + std::to_string(h);
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  const double depth = l * log2n(n);
  for (int i = 0; i < h; ++i) {
    for (Vertex v : m.branch_sets[i]) {
      if (v < 0 || v >= n)
        return std::string("branch set vertex outside the graph");
      if (owner[v] >= 0)
        return "branch sets " + std::to_string(owner[v] + 1) + " and " +
               std::to_string(i + 1) + " share vertex " +
               std::to_string(v + 1);
      owner[v] = i;
    }
    int r = induced_radius(g, m.branch_sets[i]);
    if (r < 0)
      return "branch set " + std::to_string(i + 1) +
             " is empty or disconnected";
    if (r > depth + 1e-9)
      return "branch set " + std::to_string(i + 1) + " has radius " +
             std::to_string(r) + " > l log2 n";
  }
  std::vector<std::vector<char>> joined(static_cast<std::size_t>(h),
                                        std::vector<char>(h, 0));
  for (const auto &p : m.adjacency) {
    auto [x, y] = p.edge;
    if (p.i < 0 || p.j < 0 || p.i >= h || p.j >= h || x < 0 || y < 0 ||
        x >= n || y >= n)
      return std::string("adjacency certificate out of range");
    if (owner[x] != p.i || owner[y] != p.j || !g.adjacent(x, y))
      return "adjacency certificate for sets " + std::to_string(p.i + 1) +
             "," + std::to_string(p.j + 1) + " is not an edge between them";
    joined[p.i][p.j] = joined[p.j][p.i] = 1;
  }
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j)
      if (!joined[i][j])
        return "no adjacency certificate for sets " + std::to_string(i + 1) +
               "," + std::to_string(j + 1);
  return std::nullopt;
}

inline bool validate(const Graph &g, const SeparatorOutcome &o, int l, int h,
                     const SeparatorOptions &opt = {}) {
  return !outcome_error(g, o, l, h, opt);
}

// Density certified by a minor witness: |E(G/P)| / |P| on its branch sets.
inline Rational witness_density(const Graph &g, const MinorCertificate &m) {
  return evaluate_family(g, make_family(g, m.branch_sets));
}

// Monotone bound f(r) on the grads of a class.
class ExpansionBound {
public:
  enum class Kind { constant, polynomial, exponential, table };

  static ExpansionBound constant(double c) { return {Kind::constant, c, 0, {}}; }
  // c * (r + 1)^d
  static ExpansionBound polynomial(double c, double d) {
    return {Kind::polynomial, c, d, {}};
  }
  // b^(r + 1)
  static ExpansionBound exponential(double b) {
    return {Kind::exponential, b, 0, {}};
  }
  // values[r]; the last value extends to larger r.
  static ExpansionBound table(std::vector<double> values) {
    if (values.empty())
      throw DomainError("expansion table is empty");
    for (std::size_t i = 1; i < values.size(); ++i)
      if (values[i] < values[i - 1])
        throw DomainError("expansion table must be nondecreasing");
    return {Kind::table, 0, 0, std::move(values)};
  }

  // "const:c", "poly:c,d", "exp:b"
  static ExpansionBound parse(const std::string &text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
      throw InputError("expansion bound '" + text +
                       "': expected const:c, poly:c,d or exp:b");
    std::string kind = text.substr(0, colon), rest = text.substr(colon + 1);
    std::vector<double> args;
    std::stringstream ss(rest);
    ss.imbue(std::locale::classic());
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::istringstream is(item);
      is.imbue(std::locale::classic());
      double x;
      if (!(is >> x) || !(is >> std::ws).eof())
        throw InputError("expansion bound '" + text + "': bad number '" +
                         item + "'");
      args.push_back(x);
    }
    if (kind == "const" && args.size() == 1)
      return constant(args[0]);
    if (kind == "poly" && args.size() == 2)
      return polynomial(args[0], args[1]);
    if (kind == "exp" && args.size() == 1)
      return exponential(args[0]);
    throw InputError("expansion bound '" + text +
                     "': expected const:c, poly:c,d or exp:b");
  }

  double operator()(int r) const {
    switch (kind_) {
    case Kind::constant:
      return a_;
    case Kind::polynomial:
      return a_ * std::pow(r + 1.0, b_);
    case Kind::exponential:
      return std::pow(a_, r + 1.0);
    case Kind::table:
      return values_[std::min<std::size_t>(static_cast<std::size_t>(r),
                                           values_.size() - 1)];
    }
    return 0;
  }

  Kind kind() const { return kind_; }
  std::string str() const {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    switch (kind_) {
    case Kind::constant:
      os << "const:" << a_;
      break;
    case Kind::polynomial:
      os << "poly:" << a_ << "," << b_;
      break;
    case Kind::exponential:
      os << "exp:" << a_;
      break;
    case Kind::table:
      os << "table[" << values_.size() << "]";
      break;
    }
    return os.str();
  }

private:
  ExpansionBound(Kind k, double a, double b, std::vector<double> v)
      : kind_(k), a_(a), b_(b), values_(std::move(v)) {}
  Kind kind_;
  double a_, b_;
  std::vector<double> values_;
};

// Largest z >= 1 with 2 z (f(z) + 2) <= sqrt(n log2 n), or 0.
inline int choose_z(int n, const ExpansionBound &f) {
  if (n < 2)
    throw DomainError("choose_z: n must be at least 2");
  const double rhs = std::sqrt(n * log2n(n));
  int z = 0;
  for (int t = 1; 2.0 * t * (f(t) + 2) <= rhs + 1e-12; ++t)
    z = t;
  return z;
}

// Greatest r with log f(r) < (log n) / 3, scanning r = 0..cap; nullopt when
// there is none, cap when the whole range qualifies.
inline std::optional<int> zeta(int n, const ExpansionBound &f, int cap = 1000) {
  std::optional<int> best;
  const double limit = std::cbrt(static_cast<double>(n));
  for (int r = 0; r <= cap; ++r) {
    if (!(f(r) < limit))
      break;
    best = r;
  }
  return best;
}

struct SublinearReport {
  int z = 0;
  std::optional<int> zeta;
  int l = 1;
  int h = 2;
  double lemma_bound = 0; // 2 * C1 * n log2 n / z, reported only
  SeparatorOutcome outcome;
  // Filled when a minor witness came back.
  bool violation = false;
  Rational certified_density;    // |E(G/P)| / |P| on the branch sets
  int witness_radius = 0;        // max radius of the branch sets
  double bound_at_radius = 0;    // f(witness_radius)
  bool violation_certified = false; // certified_density > f(witness_radius)
};

inline SublinearReport sublinear_separator(const Graph &g,
                                           const ExpansionBound &f,
                                           const SeparatorOptions &opt = {}) {
  if (!is_connected(g))
    throw DomainError("sublinear_separator: graph must be connected");
  SublinearReport r;
  const int n = g.order();
  if (n <= 1) {
    r.outcome = {SeparatorCertificate{{}, n, 0.0}};
    return r;
  }
  r.z = choose_z(n, f);
  r.zeta = zeta(n, f);
  const double lg = log2n(n);
  r.l = std::max(1, static_cast<int>(std::floor(r.z / lg)));
  r.h = std::max(2, static_cast<int>(std::floor(f(r.z) + 2)));
  r.lemma_bound = r.z > 0 ? 2 * opt.c1 * n * lg / r.z
                          : std::numeric_limits<double>::infinity();
  r.outcome = separate_or_minor(g, r.l, r.h, opt);
  if (!r.outcome.is_separator()) {
    const auto &m = r.outcome.minor();
    r.violation = true;
    r.certified_density = witness_density(g, m);
    for (int x : m.radii)
      r.witness_radius = std::max(r.witness_radius, x);
    r.bound_at_radius = f(r.witness_radius);
    r.violation_certified = r.certified_density.to_double() > r.bound_at_radius;
  }
  return r;
}

} // namespace gradkit
