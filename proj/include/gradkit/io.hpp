#pragma once

// Text formats (all ids 1-based):
//   '#' starts a comment line; blank lines are skipped.
//   first data line: "n m"
//   graph:   m lines "u v"
//   digraph: m lines "u v w"
// Writers emit edges/arcs in ascending order.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gradkit/error.hpp"
#include "gradkit/graph.hpp"

namespace gradkit {

namespace detail {

class LineReader {
public:
  explicit LineReader(std::istream &in) : in_(in) {}

  // Next non-comment, non-blank line split into integer tokens.
  bool next(std::vector<long long> &tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#')
        continue;
      tokens.clear();
      std::istringstream ss(line);
      ss.imbue(std::locale::classic());
      std::string tok;
      while (ss >> tok) {
        std::size_t used = 0;
        long long value = 0;
        try {
          value = std::stoll(tok, &used);
        } catch (const std::exception &) {
          used = 0;
        }
        if (used != tok.size())
          fail("malformed token '" + tok + "'");
        tokens.push_back(value);
      }
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string &what) const {
    throw InputError("line " + std::to_string(line_no_) + ": " + what);
  }

  int line() const { return line_no_; }

private:
  std::istream &in_;
  int line_no_ = 0;
};

inline void read_header(LineReader &reader, long long &n, long long &m) {
  std::vector<long long> tok;
  if (!reader.next(tok))
    throw InputError("missing header line \"n m\"");
  if (tok.size() != 2 || tok[0] < 0 || tok[1] < 0)
    reader.fail("header must be \"n m\" with nonnegative integers");
  n = tok[0];
  m = tok[1];
}

inline Vertex read_endpoint(LineReader &reader, long long value, long long n) {
  if (value < 1 || value > n)
    reader.fail("vertex " + std::to_string(value) + " outside 1.." +
                std::to_string(n));
  return static_cast<Vertex>(value - 1);
}

} // namespace detail

inline Graph read_graph(std::istream &in) {
  detail::LineReader reader(in);
  long long n = 0, m = 0;
  detail::read_header(reader, n, m);
  EdgeList edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::vector<long long> tok;
  for (long long i = 0; i < m; ++i) {
    if (!reader.next(tok))
      throw InputError("expected " + std::to_string(m) + " edge lines, got " +
                       std::to_string(i));
    if (tok.size() != 2)
      reader.fail("malformed edge line, expected \"u v\"");
    Vertex u = detail::read_endpoint(reader, tok[0], n);
    Vertex v = detail::read_endpoint(reader, tok[1], n);
    if (u == v)
      reader.fail("loop at vertex " + std::to_string(u + 1));
    edges.emplace_back(u, v);
  }
  if (reader.next(tok))
    reader.fail("unexpected data after " + std::to_string(m) + " edge lines");
  return build_graph(static_cast<int>(n), edges);
}

inline ArcListDigraph read_digraph(std::istream &in) {
  detail::LineReader reader(in);
  long long n = 0, m = 0;
  detail::read_header(reader, n, m);
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(m));
  std::vector<long long> tok;
  for (long long i = 0; i < m; ++i) {
    if (!reader.next(tok))
      throw InputError("expected " + std::to_string(m) + " arc lines, got " +
                       std::to_string(i));
    if (tok.size() != 3)
      reader.fail("malformed arc line, expected \"u v w\"");
    Vertex u = detail::read_endpoint(reader, tok[0], n);
    Vertex v = detail::read_endpoint(reader, tok[1], n);
    if (u == v)
      reader.fail("loop at vertex " + std::to_string(u + 1));
    if (tok[2] < 0)
      reader.fail("negative weight");
    arcs.push_back(Arc{u, v, static_cast<int>(tok[2])});
  }
  if (reader.next(tok))
    reader.fail("unexpected data after " + std::to_string(m) + " arc lines");
  return build_digraph(static_cast<int>(n), arcs);
}

inline void write_graph(std::ostream &out, const Graph &g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto &[u, v] : g.edges())
    out << u + 1 << ' ' << v + 1 << '\n';
}

inline void write_digraph(std::ostream &out, const ArcListDigraph &g) {
  out << g.order() << ' ' << g.arc_count() << '\n';
  for (const auto &a : g.sorted_arcs())
    out << a.from + 1 << ' ' << a.to + 1 << ' ' << a.weight << '\n';
}

// One record per data line: whitespace-separated 1-based ids (S-files,
// pair files, ball families).
inline std::vector<std::vector<Vertex>> read_vertex_lines(std::istream &in,
                                                          int n) {
  detail::LineReader reader(in);
  std::vector<std::vector<Vertex>> out;
  std::vector<long long> tok;
  while (reader.next(tok)) {
    std::vector<Vertex> row;
    for (long long t : tok)
      row.push_back(detail::read_endpoint(reader, t, n));
    out.push_back(std::move(row));
  }
  return out;
}

inline std::ifstream open_input(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  return in;
}

inline Graph read_graph_file(const std::string &path) {
  auto in = open_input(path);
  try {
    return read_graph(in);
  } catch (const InputError &e) {
    throw InputError(path + ": " + e.what());
  }
}

} // namespace gradkit
