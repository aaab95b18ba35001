// Acceptance run: one PASS/FAIL line per criterion on stdout, details on
// stderr. Exit status 1 if any criterion fails.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gradkit/gradkit.hpp"

using namespace gradkit;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  long long checks = 0;

  void fail(const std::string &what) {
    if (pass)
      std::cerr << "  first failure: " << what << '\n';
    pass = false;
  }
};

int ceil_log2(long long x) {
  int r = 0;
  while ((1LL << r) < x)
    ++r;
  return r;
}

std::string fixed(double x, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

// Criterion 1: orientation bound and linear runtime.
Outcome orientation_bound() {
  Outcome o;
  Stopwatch total;
  auto corpus = small_corpus(12);
  for (const auto &e : corpus) {
    auto d = orient(e.graph).digraph;
    ++o.checks;
    if (!is_acyclic(d))
      o.fail(e.spec.str() + ": orientation has a cycle");
    const long long bound = (grad(e.graph, 0).value * 2).floor();
    if (d.max_indegree() > bound)
      o.fail(e.spec.str() + ": md " + std::to_string(d.max_indegree()) +
             " > floor(2 grad0) " + std::to_string(bound));
  }
  auto t = scaling_run(
      {100, 200, 400}, [](long long k) { return grid(int(k), int(k)); },
      [](const Graph &g) { (void)orient(g); }, 5);
  for (const auto &r : t.rows)
    std::cerr << "  orient grid " << r.parameter << ": " << fixed(r.seconds, 5)
              << " s\n";
  if (!(t.exponent <= 1.15))
    o.fail("orient exponent " + fixed(t.exponent));
  double secs = total.seconds();
  if (secs >= 300)
    o.fail("suite took " + fixed(secs, 1) + " s");
  o.summary = std::to_string(corpus.size()) + " graphs, exponent " +
              fixed(t.exponent) + ", " + fixed(secs, 1) + " s";
  return o;
}

// Criterion 2: closure after each step i <= 3.
Outcome augmentation_closure() {
  Outcome o;
  long long violations = 0;
  auto corpus = small_corpus(12);
  for (const auto &e : corpus) {
    auto t = augment(e.graph, 4);
    for (std::size_t i = 0; i + 1 < t.steps.size(); ++i) {
      ++o.checks;
      long long v = closure_violations(t.steps[i], t.steps[i + 1]);
      if (v) {
        violations += v;
        o.fail(e.spec.str() + " step " + std::to_string(i + 1));
      }
    }
  }
  o.summary = std::to_string(corpus.size()) + " graphs, " +
              std::to_string(violations) + " violations";
  return o;
}

// Criterion 3: distance oracle exactness and query time.
Outcome distance_exactness() {
  Outcome o;
  std::vector<std::pair<std::string, Graph>> graphs{
      {"grid 10 10", grid(10, 10)},
      {"grid 17 17", grid(17, 17)},
      {"grid 30 30", grid(30, 30)},
      {"grid 44 45", grid(44, 45)},
      {"subdivided_clique 7 3", subdivided_clique(7, 3)},
      {"subdivided_clique 10 5", subdivided_clique(10, 5)},
      {"subdivided_clique 20 9", subdivided_clique(20, 9)},
      {"random_regular 300 3 1", random_regular(300, 3, 1)},
      {"random_regular 250 4 2", random_regular(250, 4, 2)},
      {"random_regular 1000 3 3", random_regular(1000, 3, 3)},
      {"random_regular 2000 3 4", random_regular(2000, 3, 4)},
      {"random_regular 2000 4 5", random_regular(2000, 4, 5)},
  };
  long long mismatches = 0, queries = 0;
  std::mt19937_64 rng(2024);
  for (const auto &[name, g] : graphs) {
    const int n = g.order();
    for (int k = 1; k <= 6; ++k) {
      auto idx = preprocess(g, k);
      QueryScratch scratch(n);
      auto check = [&](Vertex x, Vertex y, const std::vector<int> &from_x) {
        ++queries;
        int d = from_x[y];
        auto want = d != kUnreachable && d <= k ? DistanceAnswer::exact(d)
                                                : DistanceAnswer::beyond();
        if (query(idx, x, y, scratch) != want) {
          ++mismatches;
          o.fail(name + " k=" + std::to_string(k) + " pair " +
                 std::to_string(x + 1) + "," + std::to_string(y + 1));
        }
      };
      if (n <= 300) {
        for (Vertex x = 0; x < n; ++x) {
          auto dx = bfs_distances(g, x);
          for (Vertex y = 0; y < n; ++y)
            check(x, y, dx);
        }
      } else {
        // 10^5 pairs, grouped by source so each BFS serves 100 pairs.
        for (int s = 0; s < 1000; ++s) {
          Vertex x = static_cast<Vertex>(rng() % n);
          auto dx = bfs_distances(g, x);
          for (int j = 0; j < 100; ++j)
            check(x, static_cast<Vertex>(rng() % n), dx);
        }
      }
    }
  }
  o.checks = queries;

  std::vector<double> mean;
  for (int n : {500, 1000, 2000}) {
    auto g = random_regular(n, 3, 11);
    auto idx = preprocess(g, 4);
    QueryScratch scratch(n);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int i = 0; i < 200000; ++i)
      pairs.emplace_back(static_cast<Vertex>(rng() % n),
                         static_cast<Vertex>(rng() % n));
    double best = 1e30;
    long long sink = 0;
    for (int rep = 0; rep < 5; ++rep) {
      Stopwatch w;
      for (const auto &[x, y] : pairs)
        sink += query(idx, x, y, scratch).distance();
      best = std::min(best, w.seconds());
    }
    mean.push_back(best / pairs.size() * 1e9);
    std::cerr << "  query n=" << n << ": " << fixed(mean.back(), 1)
              << " ns (checksum " << sink << ")\n";
  }
  double ratio = *std::max_element(mean.begin(), mean.end()) /
                 *std::min_element(mean.begin(), mean.end());
  if (!(ratio <= 2.0))
    o.fail("query time ratio " + fixed(ratio));
  o.summary = std::to_string(queries) + " queries, " +
              std::to_string(mismatches) + " mismatches, time ratio " +
              fixed(ratio, 2);
  return o;
}

// Criterion 4: tree-depth formulas and decision.
Outcome treedepth_formulas() {
  Outcome o;
  for (int k = 1; k <= 31; ++k) {
    ++o.checks;
    int td = treedepth_exact(path_graph(k), 32).depth;
    if (td != ceil_log2(k + 1))
      o.fail("P" + std::to_string(k) + " td " + std::to_string(td));
  }
  for (const auto &e : small_corpus(14)) {
    const auto &g = e.graph;
    auto exact = treedepth_exact(g);
    const int t = exact.depth;
    o.checks += 3;
    for (const auto &comp : component_vertex_sets(g)) {
      auto sub = induced_subgraph(g, comp).graph;
      int tc = treedepth_exact(sub).depth;
      if (sub.order() > fin_bound(sub.max_degree(), tc))
        o.fail(e.spec.str() + ": fin inequality");
    }
    const int lp = longest_path(g);
    if (ceil_log2(lp + 1) > t || t > (lp + 2) * (lp + 1) / 2 - 1)
      o.fail(e.spec.str() + ": longest path inequality");
    if (!closure_contains(g, exact.forest) || exact.forest.height() != t)
      o.fail(e.spec.str() + ": exact witness forest");
  }
  for (const auto &e : small_corpus(16)) {
    const int t = treedepth_exact(e.graph).depth;
    const int h = dfs_forest(e.graph).height();
    ++o.checks;
    if (t > h || h > (1 << t) - 1)
      o.fail(e.spec.str() + ": DFS sandwich");
    for (int k = 1; k <= 5; ++k) {
      ++o.checks;
      if (treedepth_decide(e.graph, k) != (t <= k))
        o.fail(e.spec.str() + ": decide k=" + std::to_string(k));
    }
  }
  o.summary = std::to_string(o.checks) + " checks";
  return o;
}

// Criterion 5: coloring certification and forest extraction.
Outcome coloring_pipeline() {
  Outcome o;
  long long forests = 0;
  for (const auto &e : small_corpus(20)) {
    const auto &g = e.graph;
    for (int p = 1; p <= 4; ++p) {
      auto c = low_tdepth_coloring(g, p);
      ++o.checks;
      if (!detail::classes_have_low_treedepth(g, c, p))
        o.fail(e.spec.str() + " p=" + std::to_string(p) + ": class union");
      // Unions of up to max(1, p - 1) classes carry a centered coloring.
      std::vector<std::vector<Vertex>> cls(c.palette + 1);
      for (Vertex v = 0; v < g.order(); ++v)
        cls[c.color[v]].push_back(v);
      const int width = std::max(1, p - 1);
      std::vector<int> pick;
      auto rec = [&](auto &&self, int next) -> void {
        if (!pick.empty()) {
          std::vector<Vertex> vs;
          for (int x : pick)
            vs.insert(vs.end(), cls[x].begin(), cls[x].end());
          std::sort(vs.begin(), vs.end());
          auto sub = induced_subgraph(g, vs);
          std::vector<int> sc;
          for (Vertex v : sub.original)
            sc.push_back(c.color[v]);
          ++forests;
          try {
            auto f = centered_to_forest(sub.graph, make_coloring(sc));
            auto t = forest_to_decomposition(f);
            if (!closure_contains(sub.graph, f))
              o.fail(e.spec.str() + ": G not in clos(F)");
            if (!is_valid_decomposition(sub.graph, t) ||
                t.width() != f.height() - 1)
              o.fail(e.spec.str() + ": decomposition");
          } catch (const NotCenteredError &) {
            o.fail(e.spec.str() + " p=" + std::to_string(p) +
                   ": union not centered");
          }
        }
        if (static_cast<int>(pick.size()) == width)
          return;
        for (int x = next; x <= c.palette; ++x) {
          pick.push_back(x);
          self(self, x + 1);
          pick.pop_back();
        }
      };
      rec(rec, 1);
    }
  }
  o.summary = std::to_string(o.checks) + " colorings, " +
              std::to_string(forests) + " forests";
  return o;
}

// Criterion 6: pattern counts and containment.
Outcome pattern_counting() {
  Outcome o;
  std::vector<std::pair<std::string, Graph>> pats{
      {"K3", complete_graph(3)}, {"P3", path_graph(3)},
      {"P4", path_graph(4)},     {"C4", cycle_graph(4)},
      {"K4", complete_graph(4)}, {"star3", star_graph(3)}};
  std::mt19937 rng(99);
  long long mismatches = 0;
  auto corpus = small_corpus(30);
  for (const auto &e : corpus) {
    const auto &g = e.graph;
    PatternCounter counter(g, 4);
    for (const auto &[name, h] : pats) {
      auto p = make_pattern(h);
      o.checks += 2;
      if (counter.count(p).total != brute_count(g, h)) {
        ++mismatches;
        o.fail(e.spec.str() + " " + name);
      }
      std::vector<Vertex> s;
      for (Vertex v = 0; v < g.order(); ++v)
        if (rng() % 3 == 0)
          s.push_back(v);
      if (counter.count(p, s).total != brute_count(g, h, &s)) {
        ++mismatches;
        o.fail(e.spec.str() + " " + name + " restricted");
      }
    }
  }
  std::vector<Graph> hs;
  for (int k = 1; k <= 4; ++k)
    for (auto &h : graphs_up_to_iso(k))
      if (is_connected(h))
        hs.push_back(h);
  std::vector<Graph> hosts;
  for (const auto &e : small_corpus(10))
    hosts.push_back(e.graph);
  for (int k = 1; k <= 6; ++k)
    for (auto &g : graphs_up_to_iso(k))
      hosts.push_back(g);
  const std::pair<Containment, BruteMode> modes[] = {
      {Containment::hom, BruteMode::hom},
      {Containment::subgraph, BruteMode::subgraph},
      {Containment::induced, BruteMode::induced}};
  for (const auto &g : hosts)
    for (const auto &h : hs) {
      auto p = make_pattern(h);
      for (auto [mode, brute] : modes) {
        ++o.checks;
        if (decide_containment(g, p, mode) != brute_contains(g, h, brute)) {
          ++mismatches;
          o.fail("containment mismatch on a host of order " +
                 std::to_string(g.order()));
        }
      }
    }
  o.summary = std::to_string(corpus.size()) + " graphs, " +
              std::to_string(hosts.size()) + " hosts, " +
              std::to_string(mismatches) + " mismatches";
  return o;
}

// Criterion 7: separator and minor certificates.
Outcome separator_certification() {
  Outcome o;
  std::vector<std::pair<std::string, Graph>> graphs{
      {"grid 5 5", grid(5, 5)},
      {"grid 10 10", grid(10, 10)},
      {"grid 20 20", grid(20, 20)},
      {"grid 35 35", grid(35, 35)},
      {"grid 50 50", grid(50, 50)},
      {"subdivided_clique 5 1", subdivided_clique(5, 1)},
      {"subdivided_clique 8 2", subdivided_clique(8, 2)},
      {"subdivided_clique 12 3", subdivided_clique(12, 3)},
      {"random_regular 100 3 1", random_regular(100, 3, 1)},
      {"random_regular 500 3 2", random_regular(500, 3, 2)},
      {"random_regular 1000 3 3", random_regular(1000, 3, 3)},
      {"random_regular 2000 3 4", random_regular(2000, 3, 4)},
  };
  for (int h = 2; h <= 8; ++h)
    graphs.emplace_back("clique " + std::to_string(h), complete_graph(h));

  int separators = 0, minors = 0, dense_enough = 0, invalid = 0;
  auto check_minor = [&](const Graph &g, const MinorCertificate &m, int h,
                         const std::string &what) {
    ++minors;
    // The quotient density of the witness, compared against h - 1.
    Rational d = witness_density(g, m);
    if (d >= Rational(h - 1))
      ++dense_enough;
    else
      o.fail(what + ": witness density " + d.str() + " < h - 1 = " +
             std::to_string(h - 1));
    Rational half(h - 1, 2);
    if (d < half)
      std::cerr << "  " << what << ": density " << d.str()
                << " below (h - 1)/2\n";
  };
  auto check = [&](const Graph &g, const SeparatorOutcome &out, int l, int h,
                   const std::string &what) {
    ++o.checks;
    if (auto err = outcome_error(g, out, l, h)) {
      ++invalid;
      o.fail(what + ": " + *err);
      return;
    }
    if (out.is_separator()) {
      ++separators;
      const auto &s = out.separator();
      const double bound = separator_size_bound(g.order(), l, h, 4.0);
      if (static_cast<double>(s.separator.size()) > bound ||
          s.largest_component > balance_limit(g.order())) {
        ++invalid;
        o.fail(what + ": size or balance");
      }
    } else {
      check_minor(g, out.minor(), h, what);
    }
  };
  for (const auto &[name, g] : graphs)
    for (int l : {1, 2, 4})
      for (int h : {2, 3, 5, 8}) {
        auto out = separate_or_minor(g, l, h);
        check(g, out, l, h,
              name + " l=" + std::to_string(l) + " h=" + std::to_string(h));
      }
  std::vector<std::pair<std::string, std::string>> bounds{
      {"grid 50 50", "poly:2,1"},
      {"random_regular 2000 3 4", "exp:3"},
      {"subdivided_clique 12 3", "const:12"},
      {"clique 8", "const:0.5"},
      {"random_regular 1000 3 3", "const:0.5"},
      {"grid 35 35", "const:0.5"},
  };
  for (const auto &[name, spec] : bounds) {
    const Graph *g = nullptr;
    for (const auto &[n2, g2] : graphs)
      if (n2 == name)
        g = &g2;
    auto f = ExpansionBound::parse(spec);
    auto r = sublinear_separator(*g, f);
    check(*g, r.outcome, r.l, r.h, name + " " + spec);
  }
  {
    auto k10 = complete_graph(10);
    auto r = sublinear_separator(k10, ExpansionBound::constant(0.5));
    ++o.checks;
    if (!r.violation)
      o.fail("K10 const:0.5 reported no violation");
    check(k10, r.outcome, r.l, r.h, "clique 10 const:0.5");
  }
  std::cerr << "  " << minors << " minor witnesses, " << dense_enough
            << " with density >= h - 1\n";
  o.summary = std::to_string(o.checks) + " outcomes, " +
              std::to_string(invalid) + " invalid, " +
              std::to_string(separators) + " separators, " +
              std::to_string(minors) + " minors, " +
              std::to_string(dense_enough) + " witnesses reach h - 1";
  return o;
}

// Criterion 8: two-step augmentation on grids.
Outcome augmentation_linearity() {
  Outcome o;
  auto t = scaling_run(
      {100, 200, 400}, [](long long k) { return grid(int(k), int(k)); },
      [](const Graph &g) { (void)augment(g, 2); }, 3);
  for (const auto &r : t.rows)
    std::cerr << "  augment grid n=" << r.n << ": " << fixed(r.seconds, 4)
              << " s\n";
  o.checks = static_cast<long long>(t.rows.size());
  if (!(t.exponent <= 1.25))
    o.fail("exponent " + fixed(t.exponent));
  o.summary = "exponent " + fixed(t.exponent);
  return o;
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char *name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "orientation bound", orientation_bound},
      {2, "augmentation closure", augmentation_closure},
      {3, "distance oracle exactness", distance_exactness},
      {4, "tree-depth formulas", treedepth_formulas},
      {5, "coloring pipeline", coloring_pipeline},
      {6, "pattern counting", pattern_counting},
      {7, "separator certification", separator_certification},
      {8, "augmentation linearity", augmentation_linearity},
  };
  int failed = 0;
  for (const auto &c : criteria) {
    std::cerr << "criterion " << c.id << ": " << c.name << '\n';
    Outcome o;
    Stopwatch w;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.fail(std::string("exception: ") + e.what());
      o.summary = "aborted";
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.id << ' ' << c.name
              << ": " << o.summary << " (" << fixed(w.seconds(), 1) << " s)"
              << std::endl;
  }
  return failed ? 1 : 0;
}
