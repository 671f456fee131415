#include "rst/degree.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <thread>

#include "rst/distances.hpp"

namespace rst {

namespace {

std::vector<VertexId> neighbors(const Graph& g, VertexId v) {
  std::vector<VertexId> out;
  for (const auto& inc : g.incident(v)) out.push_back(inc.neighbor);
  std::sort(out.begin(), out.end());
  return out;
}

// Smallest-id edge on the t-cycle closed by `add` that satisfies `ok`.
template <class Pred>
EdgeId cycle_edge(const Graph& g, const EdgeSet& t, EdgeId add, Pred ok) {
  Subgraph sub(g, t);
  EdgeId best = 0;
  for (EdgeId f : forest_path(sub, g.edge(add).u, g.edge(add).v))
    if (ok(f) && (best == 0 || f < best)) best = f;
  return best;
}

// Spanning tree containing the forest F; the remaining edges are taken by id.
SpanningTree extend_to_tree(const Graph& g, const std::vector<EdgeId>& forest) {
  UnionFind uf(g.vertex_count());
  std::vector<EdgeId> edges;
  for (EdgeId e : forest) {
    if (!uf.unite(g.edge(e).u, g.edge(e).v)) throw std::logic_error("witness edge set has a cycle");
    edges.push_back(e);
  }
  for (EdgeId e = 1; e <= g.edge_count(); ++e)
    if (uf.unite(g.edge(e).u, g.edge(e).v)) edges.push_back(e);
  return SpanningTree(g, std::move(edges));
}

int degree_in(const Graph& g, const EdgeSet& t, VertexId v) {
  int deg = 0;
  for (const auto& inc : g.incident(v))
    if (edge_set_contains(t, inc.edge)) ++deg;
  return deg;
}

}  // namespace

std::vector<VertexId> high_degree_set(const SpanningTree& t, int d) {
  auto deg = t.degrees();
  std::vector<VertexId> out;
  for (VertexId v = 0; v < static_cast<int>(deg.size()); ++v)
    if (deg[static_cast<std::size_t>(v)] >= d) out.push_back(v);
  return out;
}

ReconfSequence shared_hub_sequence(const SpanningTree& t1, const SpanningTree& t2, VertexId u, int d) {
  const Graph& g = t1.host();
  if (&g != &t2.host()) throw std::invalid_argument("trees belong to different graphs");
  if (!g.valid_vertex(u) || degree_in(g, t1.edges(), u) < d || degree_in(g, t2.edges(), u) < d)
    throw std::invalid_argument("hub vertex must have degree >= d in both trees");
  ReconfSequence seq(Constraint::max_deg_ge(d), t1);
  auto shared = [&] {
    int k = 0;
    for (const auto& inc : g.incident(u))
      if (seq.back().contains(inc.edge) && t2.contains(inc.edge)) ++k;
    return k;
  };
  while (shared() < d) {
    EdgeId add = 0;
    for (const auto& inc : g.incident(u))
      if (t2.contains(inc.edge) && !seq.back().contains(inc.edge) && (add == 0 || inc.edge < add)) add = inc.edge;
    EdgeId drop = cycle_edge(g, seq.back().edges(), add, [&](EdgeId f) { return !t2.contains(f); });
    seq.push(drop, add);
  }
  seq.append(unconstrained_sequence(seq.back(), t2, seq.constraint));
  return seq;
}

bool degree_aux_edge(const Graph& g, int d, VertexId u, VertexId v) {
  if (u == v || !g.valid_vertex(u) || !g.valid_vertex(v)) return false;
  if (g.degree(u) < d || g.degree(v) < d) return false;
  auto nu = neighbors(g, u);
  auto nv = neighbors(g, v);
  std::vector<VertexId> uni;
  std::set_union(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(uni));
  int need = g.adjacent(u, v) ? 2 * d - 1 : 2 * d - 2;
  return static_cast<int>(uni.size()) >= need;
}

std::optional<std::pair<SpanningTree, SpanningTree>> degree_aux_witness(const Graph& g, int d, VertexId u,
                                                                        VertexId v) {
  if (!g.is_connected() || !degree_aux_edge(g, d, u, v)) return std::nullopt;
  if (d <= 1) {
    SpanningTree t = extend_to_tree(g, {});
    return std::pair{t, t};
  }
  auto nu = neighbors(g, u);
  auto nv = neighbors(g, v);
  auto in = [](const std::vector<VertexId>& s, VertexId x) { return std::binary_search(s.begin(), s.end(), x); };
  std::optional<EdgeId> uv = g.find_edge(u, v);
  int su_size = uv ? d - 1 : d;
  int sv_size = uv ? d - 2 : d - 1;

  // S_u: private neighbors of u first, then shared ones; smallest ids first.
  std::vector<VertexId> su;
  for (int pass = 0; pass < 2 && static_cast<int>(su.size()) < su_size; ++pass) {
    for (VertexId w : nu) {
      if (static_cast<int>(su.size()) == su_size) break;
      if (w == v) continue;
      if ((pass == 0) == !in(nv, w)) su.push_back(w);
    }
  }
  std::sort(su.begin(), su.end());
  // S_v: neighbors outside S_u first; at most one shared vertex when u, v are non-adjacent.
  std::vector<VertexId> sv;
  for (VertexId w : nv) {
    if (static_cast<int>(sv.size()) == sv_size) break;
    if (w != u && !in(su, w)) sv.push_back(w);
  }
  if (!uv && static_cast<int>(sv.size()) < sv_size) {
    for (VertexId w : nv) {
      if (in(su, w)) {
        sv.push_back(w);
        break;
      }
    }
  }
  if (static_cast<int>(su.size()) != su_size || static_cast<int>(sv.size()) != sv_size)
    throw std::logic_error("hub witness sets could not be filled");

  std::vector<EdgeId> forest;
  for (VertexId w : su) forest.push_back(*g.find_edge(u, w));
  for (VertexId w : sv) forest.push_back(*g.find_edge(v, w));
  if (uv) forest.push_back(*uv);
  SpanningTree t = extend_to_tree(g, forest);
  if (degree_in(g, t.edges(), v) >= d) return std::pair{t, t};

  EdgeId add = 0;
  for (const auto& inc : g.incident(v))
    if (!t.contains(inc.edge) && (add == 0 || inc.edge < add)) add = inc.edge;
  EdgeId drop = cycle_edge(g, t.edges(), add, [&](EdgeId f) { return !g.edge(f).has(v); });
  SpanningTree t2 = apply_flip(t, drop, add);
  return std::pair{t, t2};
}

DegreeAuxGraph build_degree_aux_graph(const Graph& g, int d, int jobs) {
  int n = g.vertex_count();
  std::vector<std::vector<VertexId>> rows(static_cast<std::size_t>(n));
  auto work = [&](int offset, int stride) {
    for (VertexId u = offset; u < n; u += stride)
      for (VertexId v = u + 1; v < n; ++v)
        if (degree_aux_edge(g, d, u, v)) rows[static_cast<std::size_t>(u)].push_back(v);
  };
  jobs = std::clamp(jobs, 1, std::max(n, 1));
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work, j, jobs);
    for (auto& th : pool) th.join();
  }
  DegreeAuxGraph aux;
  aux.vertex_count = n;
  aux.adjacency.resize(static_cast<std::size_t>(n));
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : rows[static_cast<std::size_t>(u)]) {
      aux.edges.emplace_back(u, v);
      aux.adjacency[static_cast<std::size_t>(u)].push_back(v);
      aux.adjacency[static_cast<std::size_t>(v)].push_back(u);
    }
  }
  for (auto& a : aux.adjacency) std::sort(a.begin(), a.end());
  return aux;
}

LargeDegreeSolver::LargeDegreeSolver(const Graph& g, int d, int jobs)
    : g_(&g), d_(d), aux_(build_degree_aux_graph(g, d, jobs)) {
  if (!g.is_connected()) throw std::invalid_argument("graph is not connected");
  UnionFind uf(g.vertex_count());
  for (auto [a, b] : aux_.edges) uf.unite(a, b);
  component_.resize(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) component_[static_cast<std::size_t>(v)] = uf.find(v);
}

void LargeDegreeSolver::require_instance(const SpanningTree& t_ini, const SpanningTree& t_tar) const {
  if (&t_ini.host() != g_ || &t_tar.host() != g_) throw std::invalid_argument("trees belong to another graph");
  if (t_ini.max_degree() < d_ || t_tar.max_degree() < d_)
    throw std::invalid_argument("both trees need maximum degree at least d");
}

bool LargeDegreeSolver::decide(const SpanningTree& t_ini, const SpanningTree& t_tar) const {
  require_instance(t_ini, t_tar);
  auto a = high_degree_set(t_ini, d_);
  auto b = high_degree_set(t_tar, d_);
  for (VertexId x : a)
    for (VertexId y : b)
      if (component_[static_cast<std::size_t>(x)] == component_[static_cast<std::size_t>(y)]) return true;
  return false;
}

std::optional<std::vector<VertexId>> LargeDegreeSolver::hub_path(const SpanningTree& t_ini,
                                                                 const SpanningTree& t_tar) const {
  require_instance(t_ini, t_tar);
  int n = g_->vertex_count();
  std::vector<VertexId> prev(static_cast<std::size_t>(n), -2);
  std::queue<VertexId> q;
  for (VertexId s : high_degree_set(t_ini, d_)) {
    prev[static_cast<std::size_t>(s)] = -1;
    q.push(s);
  }
  std::vector<char> target(static_cast<std::size_t>(n), 0);
  for (VertexId t : high_degree_set(t_tar, d_)) target[static_cast<std::size_t>(t)] = 1;
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop();
    if (target[static_cast<std::size_t>(x)]) {
      std::vector<VertexId> path;
      for (VertexId y = x; y != -1; y = prev[static_cast<std::size_t>(y)]) path.push_back(y);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (VertexId y : aux_.adjacency[static_cast<std::size_t>(x)]) {
      if (prev[static_cast<std::size_t>(y)] == -2) {
        prev[static_cast<std::size_t>(y)] = x;
        q.push(y);
      }
    }
  }
  return std::nullopt;
}

std::optional<ReconfSequence> LargeDegreeSolver::sequence(const SpanningTree& t_ini,
                                                          const SpanningTree& t_tar) const {
  auto path = hub_path(t_ini, t_tar);
  if (!path) return std::nullopt;
  ReconfSequence seq(Constraint::max_deg_ge(d_), t_ini);
  for (std::size_t i = 0; i + 1 < path->size(); ++i) {
    auto w = degree_aux_witness(*g_, d_, (*path)[i], (*path)[i + 1]);
    if (!w) throw std::logic_error("hub graph edge without witness");
    seq.append(shared_hub_sequence(seq.back(), w->first, (*path)[i], d_));
    auto out = edge_set_difference(w->first.edges(), w->second.edges());
    if (!out.empty()) {
      auto in = edge_set_difference(w->second.edges(), w->first.edges());
      seq.push(out.front(), in.front());
    }
  }
  seq.append(shared_hub_sequence(seq.back(), t_tar, path->back(), d_));
  auto check = validate_sequence(*g_, seq);
  if (!check.ok) throw std::logic_error("constructed sequence is invalid: " + check.reason);
  return seq;
}

bool decide_large_max_degree(const Graph& g, int d, const SpanningTree& t_ini, const SpanningTree& t_tar) {
  return LargeDegreeSolver(g, d).decide(t_ini, t_tar);
}

std::optional<ReconfSequence> sequence_large_max_degree(const Graph& g, int d, const SpanningTree& t_ini,
                                                        const SpanningTree& t_tar) {
  return LargeDegreeSolver(g, d).sequence(t_ini, t_tar);
}

EdgeId find_swap_edge(const SpanningTree& t_ini, const SpanningTree& t_tar, int d) {
  if (t_ini == t_tar) throw std::invalid_argument("trees are identical");
  if (t_tar.max_degree() > d - 1) throw std::invalid_argument("target tree needs maximum degree at most d-1");
  if (t_ini.max_degree() > d) throw std::invalid_argument("initial tree needs maximum degree at most d");
  const Graph& g = t_ini.host();
  auto deg = t_ini.degrees();
  for (EdgeId e : edge_set_difference(t_tar.edges(), t_ini.edges())) {
    const Edge& ed = g.edge(e);
    if (deg[static_cast<std::size_t>(ed.u)] <= d - 1 && deg[static_cast<std::size_t>(ed.v)] <= d - 1) return e;
  }
  throw std::logic_error("no swap edge found");
}

bool relaxed_precondition(int d, const SpanningTree& t_ini, const SpanningTree& t_tar) {
  int a = t_ini.max_degree();
  int b = t_tar.max_degree();
  return a <= d && b <= d && (a <= d - 1 || b <= d - 1);
}

ReconfSequence relaxed_small_degree_sequence(const Graph& g, int d, const SpanningTree& t_ini,
                                             const SpanningTree& t_tar) {
  if (&t_ini.host() != &g || &t_tar.host() != &g) throw std::invalid_argument("trees belong to another graph");
  if (!relaxed_precondition(d, t_ini, t_tar))
    throw std::invalid_argument("needs both trees of max degree <= d and one of max degree <= d-1");
  if (t_tar.max_degree() > d - 1) return relaxed_small_degree_sequence(g, d, t_tar, t_ini).reversed();
  ReconfSequence seq(Constraint::max_deg_le(d), t_ini);
  while (!(seq.back() == t_tar)) {
    EdgeId add = find_swap_edge(seq.back(), t_tar, d);
    EdgeId drop = cycle_edge(g, seq.back().edges(), add, [&](EdgeId f) { return !t_tar.contains(f); });
    seq.push(drop, add);
  }
  return seq;
}

}  // namespace rst
