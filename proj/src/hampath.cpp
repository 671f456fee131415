#include "rst/hampath.hpp"

#include <queue>
#include <stdexcept>

#include "rst/distances.hpp"

namespace rst {

EdgeSet split_forest(const Graph& g, VertexId s, VertexId t) {
  int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<EdgeId> out;
  auto bfs = [&](VertexId root) {
    std::queue<VertexId> q;
    seen[static_cast<std::size_t>(root)] = 1;
    q.push(root);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (const auto& inc : g.incident(v)) {
        if (seen[static_cast<std::size_t>(inc.neighbor)]) continue;
        seen[static_cast<std::size_t>(inc.neighbor)] = 1;
        out.push_back(inc.edge);
        q.push(inc.neighbor);
      }
    }
  };
  seen[static_cast<std::size_t>(t)] = 1;
  bfs(s);
  seen[static_cast<std::size_t>(t)] = 0;
  bfs(t);
  return make_edge_set(std::move(out));
}

HamInstance hampath_to_rst(const Graph& gp, VertexId s, VertexId t) {
  int np = gp.vertex_count();
  if (!gp.valid_vertex(s) || !gp.valid_vertex(t) || s == t) throw std::invalid_argument("need two distinct vertices");
  if (np < 3) throw std::invalid_argument("need at least three vertices");
  if (!gp.is_connected()) throw std::invalid_argument("graph is not connected");
  if (np == 3 && gp.adjacent(s, t)) throw std::invalid_argument("with three vertices s and t must not be adjacent");

  HamInstance inst;
  inst.source = std::make_shared<const Graph>(gp);
  inst.s = s;
  inst.t = t;
  inst.n_prime = np;
  inst.d = 7 * np + 1;
  for (VertexId v = 0; v < np; ++v) inst.names.push_back(std::to_string(v));

  VertexId next = np;
  auto fresh = [&](std::string name) {
    inst.names.push_back(std::move(name));
    return next++;
  };
  inst.t1 = fresh("t1");
  inst.t2 = fresh("t2");
  inst.t3 = fresh("t3");
  for (int i = 1; i <= 3 * np; ++i) inst.x.push_back(fresh("x" + std::to_string(i)));
  for (int i = 1; i <= np - 3; ++i) inst.y.push_back(fresh("y" + std::to_string(i)));
  for (int i = 1; i <= 3 * np; ++i) inst.z.push_back(fresh("z" + std::to_string(i)));

  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (EdgeId e = 1; e <= gp.edge_count(); ++e) pairs.emplace_back(gp.edge(e).u, gp.edge(e).v);
  auto add = [&](VertexId a, VertexId b) {
    pairs.emplace_back(a, b);
    return static_cast<EdgeId>(pairs.size());
  };
  inst.e_tt1 = add(t, inst.t1);
  inst.e_tt2 = add(t, inst.t2);
  inst.e_t1t2 = add(inst.t1, inst.t2);
  inst.e_t1t3 = add(inst.t1, inst.t3);
  inst.e_t2t3 = add(inst.t2, inst.t3);

  std::vector<EdgeId> px, pz;
  VertexId prev = s;
  for (VertexId v : inst.x) {
    px.push_back(add(prev, v));
    prev = v;
  }
  prev = s;
  for (VertexId v : inst.y) {
    inst.py_order.push_back(add(prev, v));
    prev = v;
  }
  inst.py_order.push_back(add(prev, t));
  prev = inst.t3;
  for (VertexId v : inst.z) {
    pz.push_back(add(prev, v));
    prev = v;
  }
  inst.px = make_edge_set(std::move(px));
  inst.py = make_edge_set(inst.py_order);
  inst.pz = make_edge_set(std::move(pz));
  inst.forest = split_forest(gp, s, t);
  inst.graph = std::make_shared<const Graph>(next, pairs);

  EdgeSet common = edge_set_union(edge_set_union(inst.px, inst.py), edge_set_union(inst.pz, inst.forest));
  inst.t_ini = SpanningTree(*inst.graph, edge_set_union(common, make_edge_set({inst.e_tt1, inst.e_t1t2, inst.e_t2t3})));
  inst.t_tar = SpanningTree(*inst.graph, edge_set_union(common, make_edge_set({inst.e_tt2, inst.e_t1t2, inst.e_t1t3})));
  return inst;
}

bool is_hamiltonian_path(const Graph& g, const std::vector<VertexId>& path, VertexId s, VertexId t) {
  if (static_cast<int>(path.size()) != g.vertex_count() || path.empty()) return false;
  if (path.front() != s || path.back() != t) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!g.valid_vertex(path[i]) || seen[static_cast<std::size_t>(path[i])]) return false;
    seen[static_cast<std::size_t>(path[i])] = 1;
    if (i > 0 && !g.adjacent(path[i - 1], path[i])) return false;
  }
  return true;
}

ReconfSequence hampath_certificate_sequence(const HamInstance& inst, const std::vector<VertexId>& path) {
  if (!is_hamiltonian_path(*inst.source, path, inst.s, inst.t))
    throw std::invalid_argument("not a Hamiltonian s-t path");
  const Graph& g = *inst.graph;
  std::vector<EdgeId> path_edges;
  for (std::size_t i = 1; i < path.size(); ++i) path_edges.push_back(*g.find_edge(path[i - 1], path[i]));
  EdgeId e_star = path_edges.front();
  EdgeId e_y = inst.py_order.front();
  EdgeSet hp = make_edge_set(path_edges);
  EdgeSet hp_cut = edge_set_difference(hp, {e_star});
  EdgeSet base = edge_set_union(inst.px, inst.pz);
  EdgeSet with_y = edge_set_union(base, inst.py);
  EdgeSet d_ini = make_edge_set({inst.e_tt1, inst.e_t1t2, inst.e_t2t3});
  EdgeSet d_tar = make_edge_set({inst.e_tt2, inst.e_t1t2, inst.e_t1t3});

  Constraint c = Constraint::diam_ge(inst.d);
  SpanningTree t1(g, edge_set_union(edge_set_union(with_y, hp_cut), d_ini));
  SpanningTree t5(g, edge_set_union(edge_set_union(with_y, hp_cut), d_tar));

  ReconfSequence seq = unconstrained_sequence(*inst.t_ini, t1, c);
  seq.push(e_y, e_star);                 // T2
  seq.push(inst.e_tt1, inst.e_tt2);      // T3
  seq.push(inst.e_t2t3, inst.e_t1t3);    // T4
  seq.push(e_star, e_y);                 // T5
  if (!(seq.back() == t5)) throw std::logic_error("certificate trees do not line up");
  seq.append(unconstrained_sequence(t5, *inst.t_tar, c));
  auto check = validate_sequence(g, seq);
  if (!check.ok) throw std::logic_error("certificate sequence is invalid: " + check.reason);
  return seq;
}

std::optional<std::vector<VertexId>> extract_hampath(const HamInstance& inst, const ReconfSequence& seq) {
  const Graph& g = *inst.graph;
  EdgeSet diamond = inst.diamond_edges();
  EdgeSet start = make_edge_set({inst.e_tt1, inst.e_t1t2, inst.e_t2t3});
  for (const SpanningTree& tree : seq.trees) {
    if (edge_set_intersection(tree.edges(), diamond) == start) continue;
    Subgraph sub(g, tree.edges());
    auto edges = forest_path(sub, inst.s, inst.t);
    std::vector<VertexId> path{inst.s};
    for (EdgeId e : edges) {
      if (!inst.is_source_edge(e)) return std::nullopt;
      path.push_back(g.edge(e).other(path.back()));
    }
    if (!is_hamiltonian_path(*inst.source, path, inst.s, inst.t)) return std::nullopt;
    return path;
  }
  return std::nullopt;
}

bool check_diameter_domination(const HamInstance& inst, const SpanningTree& t) {
  const Graph& g = *inst.graph;
  Subgraph sub(g, t.edges());
  auto dist = point_distances_half(sub, Point::vertex(inst.x.back()));
  HalfDist xz = dist[static_cast<std::size_t>(inst.z.back())];
  return xz != kUnreachable && xz / 2 == tree_diameter(g, t.edges());
}

}  // namespace rst
