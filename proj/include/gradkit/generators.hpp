#pragma once

// Deterministic constructors for the test corpus. Vertex numbering:
//   grid(a, b):               (i, j) -> i * b + j
//   subdivided_clique(q, t):  branch vertices 0..q-1, then t internal
//                             vertices per edge {i < j} in lexicographic order
//   lex_product_Kc(G, c):     (u, i) -> u * c + i

#include <cstdint>
#include <limits>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gradkit/error.hpp"
#include "gradkit/graph.hpp"

namespace gradkit {

inline Graph path_graph(int n) {
  EdgeList e;
  for (int i = 0; i + 1 < n; ++i)
    e.emplace_back(i, i + 1);
  return build_graph(n, e);
}

inline Graph cycle_graph(int n) {
  if (n < 3)
    throw DomainError("cycle needs at least 3 vertices");
  EdgeList e;
  for (int i = 0; i < n; ++i)
    e.emplace_back(i, (i + 1) % n);
  return build_graph(n, e);
}

inline Graph complete_graph(int n) {
  EdgeList e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      e.emplace_back(i, j);
  return build_graph(n, e);
}

// K_{1,m}, centre 0.
inline Graph star_graph(int m) {
  EdgeList e;
  for (int i = 1; i <= m; ++i)
    e.emplace_back(0, i);
  return build_graph(m + 1, e);
}

inline Graph empty_graph(int n) { return build_graph(n, {}); }

inline Graph grid(int a, int b) {
  if (a < 0 || b < 0)
    throw DomainError("grid dimensions must be nonnegative");
  EdgeList e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      if (j + 1 < b)
        e.emplace_back(i * b + j, i * b + j + 1);
      if (i + 1 < a)
        e.emplace_back(i * b + j, (i + 1) * b + j);
    }
  return build_graph(a * b, e);
}

inline Graph subdivided_clique(int q, int t) {
  if (q < 0 || t < 0)
    throw DomainError("subdivided_clique parameters must be nonnegative");
  EdgeList e;
  int next = q;
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      int prev = i;
      for (int s = 0; s < t; ++s) {
        e.emplace_back(prev, next);
        prev = next++;
      }
      e.emplace_back(prev, j);
    }
  return build_graph(next, e);
}

inline Graph lex_product_Kc(const Graph &g, int c) {
  if (c < 1)
    throw DomainError("lex_product_Kc needs c >= 1");
  EdgeList e;
  for (Vertex u = 0; u < g.order(); ++u)
    for (int i = 0; i < c; ++i)
      for (int j = i + 1; j < c; ++j)
        e.emplace_back(u * c + i, u * c + j);
  for (const auto &[u, v] : g.edges())
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < c; ++j)
        e.emplace_back(u * c + i, v * c + j);
  return build_graph(g.order() * c, e);
}

namespace detail {

// Uniform value in [0, bound) by rejection; independent of the standard
// library's distribution implementations, so outputs are reproducible.
inline std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

} // namespace detail

// Configuration-model pairing; rejects matchings with loops or repeated
// pairs and retries with the same stream.
inline Graph random_regular(int n, int d, std::uint64_t seed) {
  if (n < 0 || d < 0 || (d > 0 && d >= n) || (static_cast<long long>(n) * d) % 2)
    throw DomainError("random_regular: need 0 <= d < n and n*d even (n=" +
                      std::to_string(n) + ", d=" + std::to_string(d) + ")");
  if (d == 0)
    return empty_graph(n);
  std::mt19937_64 rng(seed);
  const int points = n * d;
  std::vector<int> pt(static_cast<std::size_t>(points));
  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (int i = 0; i < points; ++i)
      pt[i] = i / d;
    for (int i = points - 1; i > 0; --i)
      std::swap(pt[i], pt[detail::uniform_below(
                           rng, static_cast<std::uint64_t>(i) + 1)]);
    EdgeList e;
    bool ok = true;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int i = 0; i < points && ok; i += 2) {
      int u = pt[i], v = pt[i + 1];
      if (u == v) {
        ok = false;
        break;
      }
      for (int w : adj[u])
        if (w == v)
          ok = false;
      adj[u].push_back(v);
      adj[v].push_back(u);
      e.emplace_back(u, v);
    }
    if (ok)
      return build_graph(n, e);
  }
  throw DomainError("random_regular: no simple pairing found");
}

// A family tag with integer parameters; lex_product also carries its base.
//   path n | cycle n | clique n | star m | empty n | grid a b
//   subdivided_clique q t | random_regular n d seed | lex_product c <base>
struct GeneratorSpec {
  std::string family;
  std::vector<long long> params;
  std::shared_ptr<const GeneratorSpec> base;

  std::string str() const {
    std::ostringstream os;
    os << family;
    for (long long x : params)
      os << ' ' << x;
    if (base)
      os << ' ' << base->str();
    return os.str();
  }
};

namespace detail {

inline int checked_int(long long x, const std::string &what) {
  if (x < 0 || x > (1 << 24))
    throw DomainError(what + " out of range: " + std::to_string(x));
  return static_cast<int>(x);
}

inline int param_count(const std::string &family) {
  if (family == "path" || family == "cycle" || family == "clique" ||
      family == "star" || family == "empty" || family == "lex_product")
    return 1;
  if (family == "grid" || family == "subdivided_clique")
    return 2;
  if (family == "random_regular")
    return 3;
  return -1;
}

} // namespace detail

// Parses tokens such as {"grid", "3", "4"} or {"lex_product", "2", "path", "4"}.
inline GeneratorSpec parse_generator(const std::vector<std::string> &tokens,
                                     std::size_t &pos) {
  if (pos >= tokens.size())
    throw DomainError("generator: missing family");
  GeneratorSpec spec;
  spec.family = tokens[pos++];
  const int count = detail::param_count(spec.family);
  if (count < 0)
    throw DomainError("generator: unknown family '" + spec.family +
                      "' (path, cycle, clique, star, empty, grid, "
                      "subdivided_clique, random_regular, lex_product)");
  for (int i = 0; i < count; ++i) {
    if (pos >= tokens.size())
      throw DomainError("generator " + spec.family + ": expected " +
                        std::to_string(count) + " integer parameters");
    const auto &t = tokens[pos++];
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(t, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != t.size() || t.empty())
      throw DomainError("generator " + spec.family + ": bad integer '" + t +
                        "'");
    spec.params.push_back(x);
  }
  if (spec.family == "lex_product")
    spec.base = std::make_shared<GeneratorSpec>(parse_generator(tokens, pos));
  return spec;
}

inline GeneratorSpec parse_generator(const std::vector<std::string> &tokens) {
  std::size_t pos = 0;
  auto spec = parse_generator(tokens, pos);
  if (pos != tokens.size())
    throw DomainError("generator: unexpected parameter '" + tokens[pos] + "'");
  return spec;
}

inline Graph generate(const GeneratorSpec &s) {
  auto p = [&](std::size_t i) {
    return detail::checked_int(s.params.at(i), s.family + " parameter");
  };
  const auto &f = s.family;
  if (f == "path")
    return path_graph(p(0));
  if (f == "cycle")
    return cycle_graph(p(0));
  if (f == "clique")
    return complete_graph(p(0));
  if (f == "star")
    return star_graph(p(0));
  if (f == "empty")
    return empty_graph(p(0));
  if (f == "grid")
    return grid(p(0), p(1));
  if (f == "subdivided_clique")
    return subdivided_clique(p(0), p(1));
  if (f == "random_regular") {
    if (s.params.at(2) < 0)
      throw DomainError("random_regular: seed must be nonnegative");
    return random_regular(p(0), p(1), static_cast<std::uint64_t>(s.params[2]));
  }
  if (f == "lex_product") {
    if (!s.base)
      throw DomainError("lex_product: missing base graph");
    return lex_product_Kc(generate(*s.base), p(0));
  }
  throw DomainError("generator: unknown family '" + f + "'");
}

} // namespace gradkit
