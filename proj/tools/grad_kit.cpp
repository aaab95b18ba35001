// grad-kit: command-line front end. Data goes to stdout (or -o), messages to
// stderr. Exit codes: 0 success, 1 domain error, 2 input or usage error.

#include <fstream>
#include <functional>
#include <iostream>
#include <locale>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gradkit/gradkit.hpp"

using namespace gradkit;

namespace {

const char *kGraphFormat =
    "Graph files: a header line \"n m\", then m lines \"u v\" with 1-based\n"
    "vertex ids. Blank lines and lines starting with # are ignored.\n";

const char *kDigraphFormat =
    "Digraph files: header \"n m\", then m lines \"from to weight\".\n";

const char *kVertexFormat =
    "Vertex files: whitespace-separated 1-based ids, one record per line.\n";

std::string fixed(double x, int digits = 3) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << x;
  return os.str();
}

// Writes to the -o file when given, else stdout.
class Output {
public:
  explicit Output(const std::string &path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_)
        throw InputError("cannot write '" + path + "'");
    }
    stream().imbue(std::locale::classic());
  }
  std::ostream &stream() { return file_ ? *file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream())
      throw InputError("write failed");
  }

private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<std::vector<Vertex>> read_vertex_file(const std::string &path,
                                                  int n) {
  auto in = open_input(path);
  try {
    return read_vertex_lines(in, n);
  } catch (const InputError &e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<Vertex> read_vertex_set(const std::string &path, int n) {
  std::vector<Vertex> s;
  for (const auto &row : read_vertex_file(path, n))
    s.insert(s.end(), row.begin(), row.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

void write_ids(std::ostream &out, const std::vector<Vertex> &vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    out << (i ? " " : "") << vs[i] + 1;
  out << '\n';
}

std::function<bool(const Graph &)> named_predicate(const std::string &name,
                                                   int p) {
  auto exact = [p](const Graph &x) { return x.order() == p; };
  if (name == "connected")
    return [=](const Graph &x) { return exact(x) && is_connected(x); };
  if (name == "clique")
    return [=](const Graph &x) {
      return exact(x) &&
             2LL * x.size() == static_cast<long long>(x.order()) * (x.order() - 1);
    };
  if (name == "independent-set")
    return [=](const Graph &x) { return exact(x) && x.size() == 0; };
  if (name == "cycle")
    return [](const Graph &x) {
      if (x.order() < 3 || !is_connected(x))
        return false;
      for (Vertex v = 0; v < x.order(); ++v)
        if (x.degree(v) != 2)
          return false;
      return true;
    };
  const std::string prefix = "min-degree:";
  if (name.rfind(prefix, 0) == 0) {
    std::string rest = name.substr(prefix.size());
    std::size_t used = 0;
    int d = -1;
    try {
      d = std::stoi(rest, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != rest.size() || rest.empty() || d < 0)
      throw InputError("bad min-degree predicate '" + name + "'");
    return [d](const Graph &x) {
      if (x.order() == 0)
        return false;
      for (Vertex v = 0; v < x.order(); ++v)
        if (x.degree(v) < d)
          return false;
      return true;
    };
  }
  throw InputError("unknown predicate '" + name +
                   "' (connected, clique, cycle, independent-set, "
                   "min-degree:d)");
}

// verify: oracle comparisons on the small corpus, one report line each.
int run_verify(const std::string &suite, const Config &cfg) {
  const std::vector<std::string> known{"orient",    "augment",  "distance",
                                       "treedepth", "coloring", "pattern",
                                       "separator"};
  if (suite != "all" &&
      std::find(known.begin(), known.end(), suite) == known.end())
    throw InputError("unknown suite '" + suite +
                     "' (all, orient, augment, distance, treedepth, "
                     "coloring, pattern, separator)");
  auto wanted = [&](const char *name) { return suite == "all" || suite == name; };
  int failures = 0, lines = 0;
  auto report = [&](const std::string &id, const CorpusEntry &e,
                    const std::function<std::string()> &alg,
                    const std::function<std::string()> &oracle) {
    Stopwatch a;
    std::string x = alg();
    double ta = a.seconds();
    Stopwatch b;
    std::string y = oracle();
    double tb = b.seconds();
    auto r = make_report(id, e.spec.str(), x, y, ta, tb);
    failures += !r.match;
    ++lines;
    std::cout << format_report(r) << '\n';
  };
  auto corpus = small_corpus(10);
  for (const auto &e : corpus) {
    const auto &g = e.graph;
    if (wanted("orient"))
      report(
          "orient", e,
          [&] {
            auto d = orient(g).digraph;
            long long bound = (grad(g, 0).value * 2).floor();
            return std::to_string(is_acyclic(d)) + " " +
                   std::to_string(d.max_indegree() <= bound) + " " +
                   std::to_string(underlying_graph(d) == g);
          },
          [] { return std::string("1 1 1"); });
    if (wanted("augment"))
      report(
          "augment", e,
          [&] {
            auto t = augment(g, 4);
            long long v = 0;
            for (std::size_t i = 0; i + 1 < t.steps.size(); ++i)
              v += closure_violations(t.steps[i], t.steps[i + 1]);
            return std::to_string(v);
          },
          [] { return std::string("0"); });
    if (wanted("distance"))
      report(
          "distance", e,
          [&] {
            std::ostringstream os;
            auto idx = preprocess(g, 3);
            for (Vertex x = 0; x < g.order(); ++x)
              for (Vertex y = 0; y < g.order(); ++y)
                os << query(idx, x, y).distance() << ' ';
            return os.str();
          },
          [&] {
            std::ostringstream os;
            for (const auto &row : bfs_all_pairs(g))
              for (int d : row)
                os << (d >= 0 && d <= 3 ? d : -1) << ' ';
            return os.str();
          });
    if (wanted("treedepth"))
      report(
          "treedepth", e,
          [&] {
            return std::to_string(treedepth_exact(g, cfg.treedepth_limit).depth);
          },
          [&] { return std::to_string(brute_treedepth(g)); });
    if (wanted("coloring"))
      report(
          "coloring", e,
          [&] {
            std::string s;
            ColoringOptions opt;
            opt.certify_limit = cfg.certify_limit;
            for (int p = 1; p <= 3; ++p)
              s += std::to_string(
                  is_p_centered(g, low_tdepth_coloring(g, p, opt), p));
            return s;
          },
          [] { return std::string("111"); });
    if (wanted("pattern")) {
      const std::vector<Graph> pats{complete_graph(3), path_graph(3),
                                    cycle_graph(4), star_graph(3)};
      report(
          "pattern", e,
          [&] {
            std::string s;
            PatternCounter counter(g, 4);
            for (const auto &h : pats)
              s += std::to_string(counter.count(make_pattern(h)).total) + " ";
            return s;
          },
          [&] {
            std::string s;
            for (const auto &h : pats)
              s += std::to_string(brute_count(g, h)) + " ";
            return s;
          });
    }
    if (wanted("separator") && is_connected(g) && g.order() > 0)
      report(
          "separator", e,
          [&] {
            std::string s;
            SeparatorOptions opt{cfg.separator_c1};
            for (int h : {2, 3, 4})
              s += std::to_string(
                  validate(g, separate_or_minor(g, 1, h, opt), 1, h, opt));
            return s;
          },
          [] { return std::string("111"); });
  }
  std::cout << "# " << lines << " checks, " << failures << " mismatches\n";
  return failures ? 1 : 0;
}

} // namespace

int main(int argc, char **argv) {
  std::cout.imbue(std::locale::classic());
  std::cerr.imbue(std::locale::classic());

  CLI::App app{"grad-kit: sparse graph toolkit for classes of bounded "
               "expansion"};
  app.footer(std::string("\n") + kGraphFormat);
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  app.add_option("--config", config_path,
                 "key=value limits file (default: $GRADKIT_CONFIG)");
  app.add_option("--set", overrides, "override one config key, key=value")
      ->allow_extra_args(false);

  std::string input, out_path;
  auto add_io = [&](CLI::App *sub) {
    sub->add_option("input", input, "input graph file")->required();
    sub->add_option("-o,--output", out_path, "write data here, not stdout");
  };

  auto *orient_cmd = app.add_subcommand(
      "orient", "acyclic orientation by smallest-last peeling");
  add_io(orient_cmd);
  orient_cmd->footer(std::string("\n") + kGraphFormat +
                     "Writes the digraph (weights 1) after a line "
                     "\"# delta_max = d\".\n" + kDigraphFormat);

  int steps = 2;
  auto *augment_cmd = app.add_subcommand(
      "augment", "transitive fraternal augmentation G_1 .. G_c");
  add_io(augment_cmd);
  augment_cmd->add_option("--steps", steps, "c, number of digraphs G_1..G_c")
      ->check(CLI::PositiveNumber);
  augment_cmd->footer(std::string("\n") + kGraphFormat +
                      "Writes G_c, then a per-step table as # lines.\n" +
                      kDigraphFormat);

  std::optional<int> k_opt;
  std::string pairs_path;
  auto *dist_cmd =
      app.add_subcommand("dist", "distances up to a horizon k");
  add_io(dist_cmd);
  dist_cmd->add_option("--k", k_opt, "horizon (default: config default_k)");
  dist_cmd->add_option("--pairs", pairs_path, "file of \"x y\" lines")
      ->required();
  dist_cmd->footer(std::string("\n") + kGraphFormat +
                   "Pairs file: lines \"x y\". Output: \"x y d\" or "
                   "\"x y >k\".\n");

  int p_color = 2;
  auto *color_cmd =
      app.add_subcommand("color", "low tree-depth coloring");
  add_io(color_cmd);
  color_cmd->add_option("--p", p_color, "p, at least 1")->required();
  color_cmd->footer(std::string("\n") + kGraphFormat +
                    "Output: \"v c\" lines, then \"# colors = N\".\n");

  std::optional<int> decide_td;
  auto *tdepth_cmd = app.add_subcommand("tdepth", "tree-depth");
  add_io(tdepth_cmd);
  tdepth_cmd->add_option("--decide", decide_td,
                         "only decide td <= k; prints true or false");
  tdepth_cmd->footer(std::string("\n") + kGraphFormat +
                     "Output: \"depth N\", then \"v parent\" lines "
                     "(parent 0 for roots).\n");

  std::string pattern_path, restrict_path, decide_mode, model_pred;
  bool list = false;
  int p_model = 3;
  auto *count_cmd = app.add_subcommand(
      "count", "count, list or decide pattern copies; first-order models");
  add_io(count_cmd);
  count_cmd->add_option("--pattern", pattern_path, "pattern graph file");
  count_cmd->add_option("--restrict", restrict_path,
                        "only copies meeting these vertices");
  count_cmd->add_flag("--list", list, "list copies, one vertex map per line");
  count_cmd->add_option("--decide", decide_mode, "hom, subgraph or induced")
      ->check(CLI::IsMember({"hom", "subgraph", "induced"}));
  count_cmd->add_option("--model", model_pred,
                        "find X, |X| <= p, with G[X] satisfying: connected, "
                        "clique, cycle, independent-set, min-degree:d");
  count_cmd->add_option("--p", p_model, "size bound for --model (1..5)");
  count_cmd->footer(std::string("\n") + kGraphFormat +
                    "The pattern uses the same format and must be connected.\n" +
                    kVertexFormat +
                    "Output: listed copies (pattern vertex i maps to column "
                    "i), then \"total N\".\n");

  std::optional<int> l_opt, h_opt;
  std::string expansion, cert_path;
  auto *sep_cmd = app.add_subcommand(
      "separator", "balanced separator or shallow clique minor");
  // -h would clash with --h
  sep_cmd->set_help_flag("--help", "Print this help message and exit");
  sep_cmd->add_option("input", input, "input graph file")->required();
  sep_cmd->add_option("--l", l_opt, "depth parameter l");
  sep_cmd->add_option("--h", h_opt, "clique order h");
  sep_cmd->add_option("--expansion", expansion,
                      "bound f: const:c, poly:c,d (c (r+1)^d) or exp:b "
                      "(b^(r+1))");
  sep_cmd->add_option("--certificate", cert_path,
                      "write the certificate to this file");
  sep_cmd->footer(std::string("\n") + kGraphFormat +
                  "Certificate: \"separator\" then one id line, or "
                  "\"minor h\" then one line per branch set and \"edge i j x "
                  "y\" lines.\nLogarithms are base 2.\n");

  int r_grad = 0;
  std::string family_path;
  auto *grad_cmd = app.add_subcommand(
      "grad", "exact greatest reduced average density (small graphs)");
  grad_cmd->add_option("input", input, "input graph file")->required();
  grad_cmd->add_option("--r", r_grad, "rank r >= 0")->required();
  grad_cmd->add_option("--witness-only", family_path,
                       "evaluate this ball family instead of searching");
  grad_cmd->footer(std::string("\n") + kGraphFormat +
                   "Family file: one ball per line. Output: \"nabla_r = "
                   "p/q\", then \"ball\" lines.\n");

  std::vector<std::string> gen_args;
  auto *gen_cmd = app.add_subcommand("gen", "generate a graph");
  gen_cmd->add_option("spec", gen_args,
                      "family and parameters: path n | cycle n | clique n | "
                      "star m | empty n | grid a b | subdivided_clique q t | "
                      "random_regular n d seed | lex_product c <spec>")
      ->required();
  gen_cmd->add_option("-o,--output", out_path, "write here, not stdout");
  gen_cmd->footer(std::string("\n") + kGraphFormat);

  std::string suite = "all";
  auto *verify_cmd = app.add_subcommand(
      "verify", "compare algorithms with brute-force oracles");
  verify_cmd->add_option("--suite", suite,
                         "all, orient, augment, distance, treedepth, "
                         "coloring, pattern, separator");
  verify_cmd->footer("\nOutput: \"PASS|FAIL id [graph] digest digest "
                     "seconds seconds\" lines.\n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Config cfg = load_config(config_path, overrides);

    if (*orient_cmd) {
      auto g = read_graph_file(input);
      auto o = orient(g);
      Output out(out_path);
      out.stream() << "# delta_max = " << o.order.delta_max << '\n';
      write_digraph(out.stream(), o.digraph);
      out.finish();
    } else if (*augment_cmd) {
      auto g = read_graph_file(input);
      auto t = augment(g, steps);
      Output out(out_path);
      write_digraph(out.stream(), t.steps.back());
      out.stream() << "# step arcs md transitivity_added fraternity_added\n";
      for (std::size_t i = 0; i < t.counters.size(); ++i) {
        const auto &c = t.counters[i];
        out.stream() << "# " << i + 1 << ' ' << c.arcs << ' '
                     << c.max_indegree << ' ' << c.transitivity_added << ' '
                     << c.fraternity_added << '\n';
      }
      out.finish();
    } else if (*dist_cmd) {
      auto g = read_graph_file(input);
      const int k = k_opt.value_or(cfg.default_k);
      auto pairs = read_vertex_file(pairs_path, g.order());
      for (const auto &row : pairs)
        if (row.size() != 2)
          throw InputError(pairs_path + ": each line needs exactly two ids");
      std::cerr << "preprocessing k = " << k << '\n';
      auto idx = preprocess(g, k);
      QueryScratch scratch(g.order());
      Output out(out_path);
      for (const auto &row : pairs) {
        auto a = query(idx, row[0], row[1], scratch);
        out.stream() << row[0] + 1 << ' ' << row[1] + 1 << ' ';
        if (a.is_exact())
          out.stream() << a.distance() << '\n';
        else
          out.stream() << '>' << k << '\n';
      }
      out.finish();
    } else if (*color_cmd) {
      auto g = read_graph_file(input);
      ColoringOptions opt;
      opt.certify_limit = cfg.certify_limit;
      auto r = low_tdepth_coloring_traced(g, p_color, opt);
      std::cerr << "augmentation steps " << r.steps
                << (r.fallback ? " (fallback to distinct colors)" : "") << '\n';
      Output out(out_path);
      for (Vertex v = 0; v < g.order(); ++v)
        out.stream() << v + 1 << ' ' << r.coloring.color[v] << '\n';
      out.stream() << "# colors = " << r.coloring.used() << '\n';
      out.finish();
    } else if (*tdepth_cmd) {
      auto g = read_graph_file(input);
      Output out(out_path);
      if (decide_td) {
        if (*decide_td < 0)
          throw DomainError("--decide needs k >= 0");
        out.stream() << (treedepth_decide(g, *decide_td) ? "true" : "false")
                     << '\n';
      } else {
        auto r = treedepth_exact(g, cfg.treedepth_limit);
        out.stream() << "depth " << r.depth << '\n';
        for (Vertex v = 0; v < g.order(); ++v)
          out.stream() << v + 1 << ' ' << r.forest.parent(v) + 1 << '\n';
      }
      out.finish();
    } else if (*count_cmd) {
      auto g = read_graph_file(input);
      Output out(out_path);
      if (!model_pred.empty()) {
        auto pred = named_predicate(model_pred, p_model);
        auto w = exists_small_model(g, p_model, pred);
        if (w) {
          out.stream() << "witness";
          for (Vertex v : *w)
            out.stream() << ' ' << v + 1;
          out.stream() << '\n';
        } else {
          out.stream() << "none\n";
        }
        out.finish();
        return 0;
      }
      if (pattern_path.empty())
        throw InputError("count needs --pattern or --model");
      auto h = make_pattern(read_graph_file(pattern_path),
                            cfg.pattern_max_order);
      if (!decide_mode.empty()) {
        Containment mode = decide_mode == "hom"        ? Containment::hom
                           : decide_mode == "subgraph" ? Containment::subgraph
                                                       : Containment::induced;
        out.stream() << (decide_containment(g, h, mode) ? "true" : "false")
                     << '\n';
        out.finish();
        return 0;
      }
      std::optional<std::vector<Vertex>> s;
      if (!restrict_path.empty())
        s = read_vertex_set(restrict_path, g.order());
      PatternCounter counter(g, h.order());
      std::cerr << "coloring uses " << counter.coloring().palette
                << " colors\n";
      if (list) {
        auto copies = counter.list(h, s);
        for (const auto &phi : copies)
          write_ids(out.stream(), phi);
        out.stream() << "total " << copies.size() << '\n';
      } else {
        out.stream() << "total " << counter.count(h, s).total << '\n';
      }
      out.finish();
    } else if (*sep_cmd) {
      auto g = read_graph_file(input);
      SeparatorOptions opt{cfg.separator_c1};
      SeparatorOutcome outcome;
      int l = 0, h = 0;
      if (!expansion.empty()) {
        if (l_opt || h_opt)
          throw InputError("give either --l and --h or --expansion");
        auto f = ExpansionBound::parse(expansion);
        auto r = sublinear_separator(g, f, opt);
        l = r.l;
        h = r.h;
        outcome = r.outcome;
        std::cout << "expansion " << f.str() << '\n'
                  << "z " << r.z << '\n'
                  << "zeta " << (r.zeta ? std::to_string(*r.zeta) : "none")
                  << '\n'
                  << "lemma_bound " << fixed(r.lemma_bound) << '\n';
        if (r.violation)
          std::cout << "violation witness_density " << r.certified_density.str()
                    << " radius " << r.witness_radius << " f(radius) "
                    << fixed(r.bound_at_radius) << " certified "
                    << (r.violation_certified ? "true" : "false") << '\n';
      } else {
        if (!l_opt || !h_opt)
          throw InputError("separator needs --l and --h, or --expansion");
        l = *l_opt;
        h = *h_opt;
        outcome = separate_or_minor(g, l, h, opt);
      }
      std::cout << "l " << l << "\nh " << h << "\nlog_base 2\n";
      if (auto err = outcome_error(g, outcome, l, h, opt))
        throw std::logic_error("invalid outcome: " + *err);
      std::unique_ptr<Output> cert;
      if (!cert_path.empty())
        cert = std::make_unique<Output>(cert_path);
      if (outcome.is_separator()) {
        const auto &s = outcome.separator();
        std::cout << "separator\nsize " << s.separator.size() << "\nbound "
                  << fixed(s.size_bound) << "\nlargest_component "
                  << s.largest_component << "\nbalance_limit "
                  << balance_limit(g.order()) << '\n';
        if (cert) {
          cert->stream() << "separator\n";
          write_ids(cert->stream(), s.separator);
        }
      } else {
        const auto &m = outcome.minor();
        int radius = 0;
        std::size_t vertices = 0;
        for (std::size_t i = 0; i < m.branch_sets.size(); ++i) {
          radius = std::max(radius, m.radii[i]);
          vertices += m.branch_sets[i].size();
        }
        std::cout << "minor\nbranch_sets " << m.branch_sets.size()
                  << "\nvertices " << vertices << "\nmax_radius " << radius
                  << "\ndensity " << witness_density(g, m).str() << '\n';
        if (cert) {
          cert->stream() << "minor " << m.branch_sets.size() << '\n';
          for (const auto &b : m.branch_sets)
            write_ids(cert->stream(), b);
          for (const auto &p : m.adjacency)
            cert->stream() << "edge " << p.i + 1 << ' ' << p.j + 1 << ' '
                           << p.edge.first + 1 << ' ' << p.edge.second + 1
                           << '\n';
        }
      }
      if (cert)
        cert->finish();
    } else if (*grad_cmd) {
      auto g = read_graph_file(input);
      if (r_grad < 0)
        throw DomainError("--r must be nonnegative");
      BallFamily family;
      Rational value;
      if (!family_path.empty()) {
        family = make_family(g, read_vertex_file(family_path, g.order()));
        for (int x : family.radii)
          if (x > r_grad)
            throw InvalidFamilyError("family has a ball of radius " +
                                     std::to_string(x) + " > r");
        value = evaluate_family(g, family);
      } else {
        auto v = grad(g, r_grad, GradLimits{cfg.grad_max_order_r0,
                                            cfg.grad_max_order});
        value = v.value;
        family = v.witness;
      }
      std::cout << "nabla_" << r_grad << " = " << value.str() << '\n';
      for (const auto &b : family.balls) {
        std::cout << "ball";
        for (Vertex v : b)
          std::cout << ' ' << v + 1;
        std::cout << '\n';
      }
    } else if (*gen_cmd) {
      auto g = generate(parse_generator(gen_args));
      Output out(out_path);
      write_graph(out.stream(), g);
      out.finish();
    } else if (*verify_cmd) {
      return run_verify(suite, cfg);
    }
  } catch (const InputError &e) {
    std::cerr << "grad-kit: " << e.what() << '\n';
    return 2;
  } catch (const DomainError &e) {
    std::cerr << "grad-kit: " << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "grad-kit: internal error: " << e.what() << '\n';
    return 3;
  }
  std::cout.flush();
  return 0;
}
