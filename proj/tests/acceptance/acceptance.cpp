// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number of failures.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "graph_families.hpp"
#include "rst/degree.hpp"
#include "rst/diameter.hpp"
#include "rst/distances.hpp"
#include "rst/hampath.hpp"
#include "rst/ncl.hpp"
#include "rst/oracle.hpp"

using namespace rst;
using namespace rst::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // 0: no runtime bound
  std::function<Outcome()> run;
};

std::vector<SpanningTree> trees_of(const Graph& g, const FlipGraph& fg) {
  std::vector<SpanningTree> out;
  out.reserve(fg.size());
  for (std::size_t i = 0; i < fg.size(); ++i) out.emplace_back(g, fg.tree(i));
  return out;
}

std::string graph_text(const Graph& g) {
  std::ostringstream s;
  s << "n=" << g.vertex_count() << " {";
  for (EdgeId e = 1; e <= g.edge_count(); ++e) s << (e > 1 ? " " : "") << g.edge(e).u << g.edge(e).v;
  s << "}";
  return s.str();
}

// Mismatch counter that keeps the first example.
struct Tally {
  long long checked = 0;
  long long bad = 0;
  std::string first;
  void record(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (ok) return;
    if (bad++ == 0) first = what();
  }
  Outcome outcome(const std::string& unit) const {
    std::ostringstream s;
    s << checked << ' ' << unit << ", " << bad << " mismatches";
    if (bad) s << "; first: " << first;
    return {bad == 0, s.str()};
  }
};

// Constrained flip graph components against the solver on every ordered pair,
// plus the free functions and oracle_decide on a few sampled pairs.
template <class Decide, class FreeDecide>
void compare_with_flip_graph(const Graph& g, Constraint c, const Decide& decide, const FreeDecide& free_decide,
                             std::mt19937_64& rng, Tally& tally) {
  FlipGraph fg(g, c);
  if (fg.size() == 0) return;
  auto trees = trees_of(g, fg);
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (std::size_t j = 0; j < trees.size(); ++j) {
      bool truth = fg.component(i) == fg.component(j);
      tally.record(decide(trees[i], trees[j]) == truth, [&] {
        return graph_text(g) + " " + c.to_string() + " pair " + std::to_string(i) + "," + std::to_string(j);
      });
    }
  std::uniform_int_distribution<std::size_t> pick(0, trees.size() - 1);
  for (int k = 0; k < 3; ++k) {
    std::size_t i = pick(rng), j = pick(rng);
    bool oracle = oracle_decide(g, c, trees[i], trees[j]).reachable;
    tally.record(free_decide(trees[i], trees[j]) == oracle, [&] {
      return graph_text(g) + " " + c.to_string() + " sampled pair vs oracle_decide";
    });
  }
}

Outcome large_degree_equivalence() {
  Tally tally;
  std::mt19937_64 rng(101);
  for (const Graph& g : connected_graphs_up_to(6))
    for (int d = 2; d <= 4; ++d) {
      LargeDegreeSolver solver(g, d);
      compare_with_flip_graph(
          g, Constraint::max_deg_ge(d), [&](const auto& a, const auto& b) { return solver.decide(a, b); },
          [&](const auto& a, const auto& b) { return decide_large_max_degree(g, d, a, b); }, rng, tally);
    }
  return tally.outcome("tree pairs");
}

Outcome small_diameter_equivalence() {
  Tally tally;
  std::mt19937_64 rng(202);
  for (const Graph& g : connected_graphs_up_to(6)) {
    GoodTripleSearch search(g);
    CenterPairTable table(search, 6);
    for (int d = 2; d <= 6; ++d) {
      SmallDiameterSolver solver(table, d);
      compare_with_flip_graph(
          g, Constraint::diam_le(d), [&](const auto& a, const auto& b) { return solver.decide(a, b); },
          [&](const auto& a, const auto& b) { return decide_small_diameter(g, d, a, b); }, rng, tally);
    }
  }
  return tally.outcome("tree pairs");
}

Outcome degree_formula() {
  Tally tally;
  for (const Graph& g : connected_graphs_up_to(6)) {
    int n = g.vertex_count();
    for (int d = 1; d <= n; ++d) {
      auto truth = oracle_degree_pairs(g, d);
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v) {
          if (u == v) continue;
          bool expect = truth[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
          tally.record(degree_aux_edge(g, d, u, v) == expect, [&] {
            return graph_text(g) + " d=" + std::to_string(d) + " u=" + std::to_string(u) + " v=" + std::to_string(v);
          });
        }
    }
  }
  return tally.outcome("vertex pairs");
}

Outcome witness_search() {
  Tally found_vs_truth;
  Tally oracle_pairs_connected;
  for (const Graph& g : connected_graphs_up_to(5)) {
    int n = g.vertex_count();
    GoodTripleSearch search(g);
    CenterPairTable table(search, 2 * n);
    auto pts = all_points(g);
    for (int d = 1; d <= 2 * n; ++d) {
      auto aux = table.aux_graph(d);
      UnionFind uf(static_cast<int>(pts.size()));
      for (const auto& e : aux.edges) uf.unite(e.a, e.b);
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) {
          if (i == j) continue;
          auto what = [&] { return graph_text(g) + " d=" + std::to_string(d) + " " + to_string(pts[i]) + "," + to_string(pts[j]); };
          bool found = search.find_good_tree(d, pts[i], pts[j]).has_value() ||
                       search.find_good_cyclic_pseudotree(d, pts[i], pts[j]).has_value();
          bool truth = oracle_good_triple(g, d, pts[i], pts[j]).has_value();
          found_vs_truth.record(found == truth, what);
          if (oracle_center_pair(g, d, pts[i], pts[j]))
            oracle_pairs_connected.record(uf.find(static_cast<int>(i)) == uf.find(static_cast<int>(j)), what);
        }
    }
  }
  auto a = found_vs_truth.outcome("(pair, d) searches");
  auto b = oracle_pairs_connected.outcome("center pairs checked for connectivity");
  return {a.pass && b.pass, a.detail + "; " + b.detail};
}

// Kruskal over a shuffled order skipping edges that would push a degree past cap.
std::optional<SpanningTree> random_capped_tree(const Graph& g, int cap, std::mt19937_64& rng) {
  std::vector<EdgeId> order;
  for (EdgeId e = 1; e <= g.edge_count(); ++e) order.push_back(e);
  std::shuffle(order.begin(), order.end(), rng);
  UnionFind uf(g.vertex_count());
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<EdgeId> picked;
  for (EdgeId e : order) {
    auto [u, v] = std::pair{g.edge(e).u, g.edge(e).v};
    if (deg[static_cast<std::size_t>(u)] >= cap || deg[static_cast<std::size_t>(v)] >= cap) continue;
    if (!uf.unite(u, v)) continue;
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
    picked.push_back(e);
  }
  return SpanningTree::make(g, picked);
}

Outcome relaxed_small_degree() {
  std::mt19937_64 rng(505);
  Tally tally;
  int attempts = 0;
  while (tally.checked < 1000) {
    if (++attempts > 100000) return {false, "could not generate enough instances"};
    int n = std::uniform_int_distribution<int>(2, 50)(rng);
    double p = std::uniform_real_distribution<double>(0.0, 0.3)(rng);
    Graph g = random_connected_graph(n, p, rng);
    int d = std::uniform_int_distribution<int>(2, 5)(rng);
    auto low = random_capped_tree(g, d - 1, rng);
    auto high = random_capped_tree(g, d, rng);
    if (!low || !high) continue;
    bool low_first = rng() & 1;
    const SpanningTree& ini = low_first ? *low : *high;
    const SpanningTree& tar = low_first ? *high : *low;
    auto what = [&] { return graph_text(g) + " d=" + std::to_string(d); };
    try {
      auto seq = relaxed_small_degree_sequence(g, d, ini, tar);
      auto expect = edge_set_difference(ini.edges(), tar.edges()).size();
      bool ok = validate_sequence(g, seq).ok && seq.front() == ini && seq.back() == tar &&
                seq.constraint == Constraint::max_deg_le(d) && seq.length() == expect;
      tally.record(ok, what);
    } catch (const std::exception& e) {
      tally.record(false, [&] { return what() + " threw " + e.what(); });
    }
  }
  return tally.outcome("instances");
}

Outcome regression_fixtures() {
  std::ostringstream s;
  bool pass = true;
  auto expect = [&](const std::string& name, const Graph& g, Constraint c, const SpanningTree& a,
                    const SpanningTree& b, bool algorithm, bool want) {
    bool oracle = oracle_decide(g, c, a, b).reachable;
    bool ok = algorithm == want && oracle == want;
    pass = pass && ok;
    s << name << (want ? "=YES" : "=NO") << (ok ? "" : " MISMATCH") << "; ";
  };
  Graph k4 = complete_graph(4);
  SpanningTree s0(k4, star_tree(k4, 0)), s1(k4, star_tree(k4, 1));
  expect("K4 diam<=2 star0->star1", k4, Constraint::diam_le(2), s0, s1, decide_small_diameter(k4, 2, s0, s1), false);
  expect("K4 maxdeg>=3 star0->star1", k4, Constraint::max_deg_ge(3), s0, s1, decide_large_max_degree(k4, 3, s0, s1),
         false);
  Graph c4 = cycle_graph(4);
  FlipGraph fg(c4, Constraint::diam_le(3));
  auto trees = trees_of(c4, fg);
  bool all_yes = true, all_oracle = true;
  for (const auto& a : trees)
    for (const auto& b : trees) {
      all_yes = all_yes && decide_small_diameter(c4, 3, a, b);
      all_oracle = all_oracle && oracle_decide(c4, Constraint::diam_le(3), a, b).reachable;
    }
  bool c4_ok = all_yes && all_oracle && trees.size() == 4;
  pass = pass && c4_ok;
  s << "C4 diam<=3 all " << trees.size() * trees.size() << " pairs=YES" << (c4_ok ? "" : " MISMATCH");
  return {pass, s.str()};
}

NCLGraph ncl_or_triple() {
  return {{NCLGraph::Kind::Or, NCLGraph::Kind::Or}, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}};
}

NCLGraph ncl_and_triple() {
  return {{NCLGraph::Kind::And, NCLGraph::Kind::And}, {{0, 1, 2}, {0, 1, 1}, {0, 1, 1}}};
}

// Two AND vertices joined by their light edges, each hanging off an OR vertex.
NCLGraph ncl_mixed() {
  using K = NCLGraph::Kind;
  return {{K::And, K::And, K::Or, K::Or}, {{0, 1, 1}, {0, 1, 1}, {0, 2, 2}, {1, 3, 2}, {2, 3, 2}, {2, 3, 2}}};
}

// K4 with OR vertices.
NCLGraph ncl_k4_or() {
  using K = NCLGraph::Kind;
  return {{K::Or, K::Or, K::Or, K::Or}, {{0, 1, 2}, {0, 2, 2}, {0, 3, 2}, {1, 2, 2}, {1, 3, 2}, {2, 3, 2}}};
}

// Triangular prism: OR triangle on top, AND triangle below, heavy rungs.
NCLGraph ncl_prism() {
  using K = NCLGraph::Kind;
  return {{K::Or, K::Or, K::Or, K::And, K::And, K::And},
          {{0, 1, 2}, {1, 2, 2}, {2, 0, 2}, {0, 3, 2}, {1, 4, 2}, {2, 5, 2}, {3, 4, 1}, {4, 5, 1}, {5, 3, 1}}};
}

Outcome ncl_reduction() {
  std::vector<std::pair<std::string, NCLGraph>> family{
      {"or-triple", ncl_or_triple()}, {"and-triple", ncl_and_triple()}, {"mixed", ncl_mixed()}, {"k4-or", ncl_k4_or()},
      {"prism", ncl_prism()}};
  Tally roundtrip, gadget, steps;
  std::ostringstream configs;
  for (const auto& [name, h] : family) {
    auto all = all_ncl_configurations(h);
    configs << name << ":" << all.size() << " ";
    for (int d : {3, 4}) {
      NCLInstance inst = ncl_to_rst(h, d);
      std::vector<SpanningTree> trees;
      for (const auto& s : all) {
        auto what = [&, name = name] { return name + " d=" + std::to_string(d); };
        try {
          SpanningTree t = tree_of_orientation(inst, s);
          roundtrip.record(orientation_of_tree(inst, t) == s, what);
          auto violation = gadget_property_violation(inst, t);
          gadget.record(!violation, [&] { return what() + ": " + *violation; });
          trees.push_back(t);
        } catch (const std::exception& e) {
          roundtrip.record(false, [&] { return what() + " threw " + e.what(); });
          trees.push_back(SpanningTree(*inst.graph, {}));
        }
      }
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
          if (ncl_distance(all[i], all[j]) != 1) continue;
          auto what = [&, name = name] { return name + " d=" + std::to_string(d) + " configs " + std::to_string(i) + "->" + std::to_string(j); };
          try {
            auto seq = ncl_step_sequence(inst, trees[i], trees[j]);
            bool ok = validate_sequence(*inst.graph, seq).ok && seq.front() == trees[i] && seq.back() == trees[j] &&
                      seq.constraint == Constraint::max_deg_le(d);
            for (const auto& t : seq.trees) ok = ok && !gadget_property_violation(inst, t);
            steps.record(ok, what);
          } catch (const std::exception& e) {
            steps.record(false, [&] { return what() + " threw " + e.what(); });
          }
        }
    }
  }
  auto a = roundtrip.outcome("round trips");
  auto b = gadget.outcome("gadget checks");
  auto c = steps.outcome("adjacent steps");
  bool all_nonempty = std::all_of(family.begin(), family.end(),
                                  [](const auto& f) { return !all_ncl_configurations(f.second).empty(); });
  return {a.pass && b.pass && c.pass && all_nonempty,
          "configs " + configs.str() + "; " + a.detail + "; " + b.detail + "; " + c.detail};
}

Outcome hampath_reduction() {
  std::mt19937_64 rng(808);
  Tally cert, extract, domination;
  long long instances = 0, no_path = 0;
  auto run = [&](const Graph& gp) {
    int n = gp.vertex_count();
    for (VertexId s = 0; s < n; ++s)
      for (VertexId t = 0; t < n; ++t) {
        if (s == t || (n == 3 && gp.adjacent(s, t))) continue;
        auto path = oracle_hampath(gp, s, t);
        if (!path) {
          ++no_path;
          continue;
        }
        ++instances;
        auto what = [&] { return graph_text(gp) + " s=" + std::to_string(s) + " t=" + std::to_string(t); };
        HamInstance inst = hampath_to_rst(gp, s, t);
        try {
          auto seq = hampath_certificate_sequence(inst, *path);
          bool ok = validate_sequence(*inst.graph, seq).ok && seq.constraint == Constraint::diam_ge(7 * n + 1) &&
                    seq.front() == *inst.t_ini && seq.back() == *inst.t_tar;
          cert.record(ok, what);
          auto back = extract_hampath(inst, seq);
          extract.record(back && is_hamiltonian_path(gp, *back, s, t), what);
        } catch (const std::exception& e) {
          cert.record(false, [&] { return what() + " threw " + e.what(); });
        }
        bool dom = true;
        for (int k = 0; k < 1000; ++k) dom = dom && check_diameter_domination(inst, random_spanning_tree(*inst.graph, rng));
        domination.record(dom, what);
      }
  };
  for (int n = 3; n <= 6; ++n)
    for (const Graph& gp : connected_graphs(n)) run(gp);
  for (int n : {7, 8})
    for (int k = 0; k < 40; ++k) run(random_connected_graph(n, 0.35, rng));
  auto a = cert.outcome("certificates");
  auto b = extract.outcome("extractions");
  auto c = domination.outcome("instances x 1000 random trees");
  std::ostringstream s;
  s << instances << " instances with a path (" << no_path << " without); " << a.detail << "; " << b.detail << "; "
    << c.detail;
  return {a.pass && b.pass && c.pass, s.str()};
}

void simple_paths(const Graph& g, VertexId v, VertexId target, std::vector<char>& used, std::vector<EdgeId>& cur,
                  std::vector<std::vector<EdgeId>>& out) {
  if (v == target) {
    out.push_back(cur);
    return;
  }
  used[static_cast<std::size_t>(v)] = 1;
  for (const auto& inc : g.incident(v)) {
    if (used[static_cast<std::size_t>(inc.neighbor)]) continue;
    cur.push_back(inc.edge);
    simple_paths(g, inc.neighbor, target, used, cur, out);
    cur.pop_back();
  }
  used[static_cast<std::size_t>(v)] = 0;
}

Outcome lex_uniqueness() {
  Tally tally;
  for (const Graph& g : connected_graphs_up_to(6)) {
    Subgraph h(g);
    int n = g.vertex_count();
    for (VertexId a = 0; a < n; ++a) {
      auto tree = lex_point_tree(h, Point::vertex(a));
      for (VertexId b = 0; b < n; ++b) {
        if (a == b) continue;
        std::vector<std::vector<EdgeId>> paths;
        std::vector<char> used(static_cast<std::size_t>(n), 0);
        std::vector<EdgeId> cur;
        simple_paths(g, a, b, used, cur, paths);
        std::vector<LexLen> lens;
        for (const auto& p : paths) {
          LexLen len;
          for (EdgeId e : p) len += LexLen::edge(e);
          lens.push_back(len);
        }
        auto best = std::min_element(lens.begin(), lens.end());
        bool unique = std::count(lens.begin(), lens.end(), *best) == 1;
        // The Dijkstra path read from parent edges must be the minimizer.
        std::vector<EdgeId> walked;
        for (VertexId v = b; v != a;) {
          EdgeId e = tree.parent_edge[static_cast<std::size_t>(v)];
          if (e == 0) break;
          walked.push_back(e);
          v = g.edge(e).other(v);
        }
        std::reverse(walked.begin(), walked.end());
        bool agrees = *tree.dist[static_cast<std::size_t>(b)] == *best &&
                      make_edge_set(walked) == make_edge_set(paths[static_cast<std::size_t>(best - lens.begin())]);
        tally.record(unique && agrees && !tree.tie_seen, [&] {
          return graph_text(g) + " " + std::to_string(a) + "->" + std::to_string(b);
        });
      }
    }
  }
  return tally.outcome("vertex pairs");
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  std::vector<Criterion> criteria{
      {1, "large max degree matches the flip-graph oracle (n<=6, d=2..4)", 600, large_degree_equivalence},
      {2, "small diameter matches the flip-graph oracle (n<=6, d=2..6)", 1800, small_diameter_equivalence},
      {3, "hub edge formula matches exhaustive tree pairs (n<=6)", 0, degree_formula},
      {4, "witness search complete and sound, oracle center pairs connected (n<=5)", 0, witness_search},
      {5, "relaxed max-degree sequences valid and shortest (1000 random, n<=50)", 60, relaxed_small_degree},
      {6, "regression fixtures agree with the oracle", 0, regression_fixtures},
      {7, "NCL reduction round trip, gadget properties, step sequences", 60, ncl_reduction},
      {8, "Hamiltonian path reduction certificates and diameter domination", 300, hampath_reduction},
      {9, "lexicographic shortest paths unique (n<=6)", 0, lex_uniqueness},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = c.limit_s == 0 || secs < c.limit_s;
    bool pass = out.pass && in_time;
    failures += !pass;
    std::printf("[%s] %d %s: %s; %.1fs", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), out.detail.c_str(), secs);
    if (c.limit_s > 0) std::printf(" (limit %.0fs)", c.limit_s);
    std::printf("\n");
    std::fflush(stdout);
  }
  return failures;
}
