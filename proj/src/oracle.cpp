#include "rst/oracle.hpp"

#include <algorithm>
#include <queue>

#include "rst/distances.hpp"
#include "rst/lexlen.hpp"

namespace rst {

namespace {

struct TreeEnumerator {
  const Graph& g;
  const std::function<void(const EdgeSet&)>& visit;
  std::size_t cap;
  std::optional<int> max_degree;
  std::size_t produced = 0;
  EdgeSet chosen;
  std::vector<int> deg;

  bool still_connectable(const UnionFind& uf, EdgeId from) const {
    UnionFind copy = uf;
    int comps = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (copy.find(v) == v) ++comps;
    for (EdgeId e = from; e <= g.edge_count() && comps > 1; ++e)
      if (copy.unite(g.edge(e).u, g.edge(e).v)) --comps;
    return comps <= 1;
  }

  void run(EdgeId i, UnionFind& uf) {
    if (static_cast<int>(chosen.size()) == g.vertex_count() - 1) {
      if (++produced > cap) throw CapExceeded("more than " + std::to_string(cap) + " spanning trees");
      visit(chosen);
      return;
    }
    if (i > g.edge_count()) return;
    const Edge& e = g.edge(i);
    bool deg_ok = !max_degree || (deg[static_cast<std::size_t>(e.u)] < *max_degree &&
                                  deg[static_cast<std::size_t>(e.v)] < *max_degree);
    if (deg_ok && !uf.same(e.u, e.v)) {
      UnionFind next = uf;
      next.unite(e.u, e.v);
      chosen.push_back(i);
      ++deg[static_cast<std::size_t>(e.u)];
      ++deg[static_cast<std::size_t>(e.v)];
      run(i + 1, next);
      --deg[static_cast<std::size_t>(e.u)];
      --deg[static_cast<std::size_t>(e.v)];
      chosen.pop_back();
    }
    if (still_connectable(uf, i + 1)) run(i + 1, uf);
  }
};

// Rooted view of a tree for path queries.
struct RootedTree {
  std::vector<VertexId> parent;
  std::vector<EdgeId> parent_edge;
  std::vector<int> depth;

  RootedTree(const Graph& g, const EdgeSet& t)
      : parent(static_cast<std::size_t>(g.vertex_count()), -1),
        parent_edge(static_cast<std::size_t>(g.vertex_count()), 0),
        depth(static_cast<std::size_t>(g.vertex_count()), -1) {
    Subgraph sub(g, t);
    std::queue<VertexId> q;
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
      if (depth[static_cast<std::size_t>(root)] >= 0) continue;
      depth[static_cast<std::size_t>(root)] = 0;
      q.push(root);
      while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (const auto& inc : sub.incident(v)) {
          if (depth[static_cast<std::size_t>(inc.neighbor)] < 0) {
            depth[static_cast<std::size_t>(inc.neighbor)] = depth[static_cast<std::size_t>(v)] + 1;
            parent[static_cast<std::size_t>(inc.neighbor)] = v;
            parent_edge[static_cast<std::size_t>(inc.neighbor)] = inc.edge;
            q.push(inc.neighbor);
          }
        }
      }
    }
  }

  std::vector<EdgeId> path(VertexId a, VertexId b) const {
    std::vector<EdgeId> out;
    while (a != b) {
      if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
        out.push_back(parent_edge[static_cast<std::size_t>(a)]);
        a = parent[static_cast<std::size_t>(a)];
      } else {
        out.push_back(parent_edge[static_cast<std::size_t>(b)]);
        b = parent[static_cast<std::size_t>(b)];
      }
    }
    return out;
  }
};

}  // namespace

void for_each_spanning_tree(const Graph& g, const std::function<void(const EdgeSet&)>& visit, std::size_t cap,
                            std::optional<int> max_degree) {
  if (!g.is_connected()) return;
  TreeEnumerator en{g, visit, cap, max_degree, 0, {}, std::vector<int>(static_cast<std::size_t>(g.vertex_count()), 0)};
  UnionFind uf(g.vertex_count());
  en.run(1, uf);
}

std::vector<EdgeSet> enumerate_spanning_trees(const Graph& g, std::size_t cap) {
  std::vector<EdgeSet> out;
  for_each_spanning_tree(g, [&](const EdgeSet& t) { out.push_back(t); }, cap);
  return out;
}

std::size_t EdgeSetHash::operator()(const EdgeSet& s) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (EdgeId e : s) h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::vector<std::pair<FlipStep, EdgeSet>> flip_neighbors(const Graph& g, const EdgeSet& t) {
  RootedTree rt(g, t);
  std::vector<std::pair<FlipStep, EdgeSet>> out;
  for (EdgeId f = 1; f <= g.edge_count(); ++f) {
    if (edge_set_contains(t, f)) continue;
    auto cyc = rt.path(g.edge(f).u, g.edge(f).v);
    std::sort(cyc.begin(), cyc.end());
    for (EdgeId e : cyc) {
      EdgeSet next;
      next.reserve(t.size());
      for (EdgeId x : t)
        if (x != e) next.push_back(x);
      next.insert(std::upper_bound(next.begin(), next.end(), f), f);
      out.emplace_back(FlipStep{e, f}, std::move(next));
    }
  }
  return out;
}

FlipGraph::FlipGraph(const Graph& g, Constraint c, std::size_t cap) : g_(&g), c_(c) {
  std::optional<int> prune;
  if (c.kind == Constraint::Kind::MaxDegLe) prune = c.d;
  for_each_spanning_tree(
      g,
      [&](const EdgeSet& t) {
        if (c.satisfied_by(g, t)) {
          index_.emplace(t, trees_.size());
          trees_.push_back(t);
        }
      },
      cap, prune);
  adj_.resize(trees_.size());
  UnionFind uf(static_cast<int>(trees_.size()));
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    for (auto& [step, next] : flip_neighbors(g, trees_[i])) {
      auto it = index_.find(next);
      if (it == index_.end()) continue;
      adj_[i].push_back(it->second);
      uf.unite(static_cast<int>(i), static_cast<int>(it->second));
    }
  }
  comp_.resize(trees_.size());
  for (std::size_t i = 0; i < trees_.size(); ++i) comp_[i] = static_cast<std::size_t>(uf.find(static_cast<int>(i)));
}

std::optional<std::size_t> FlipGraph::index_of(const EdgeSet& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::vector<std::size_t>> FlipGraph::shortest_path(std::size_t from, std::size_t to) const {
  if (comp_[from] != comp_[to]) return std::nullopt;
  std::vector<std::size_t> prev(trees_.size(), trees_.size());
  std::queue<std::size_t> q;
  q.push(from);
  prev[from] = from;
  while (!q.empty() && prev[to] == trees_.size()) {
    std::size_t x = q.front();
    q.pop();
    for (std::size_t y : adj_[x]) {
      if (prev[y] == trees_.size()) {
        prev[y] = x;
        q.push(y);
      }
    }
  }
  std::vector<std::size_t> path;
  for (std::size_t x = to; x != from; x = prev[x]) path.push_back(x);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

OracleAnswer oracle_decide(const Graph& g, Constraint c, const SpanningTree& t_ini, const SpanningTree& t_tar,
                           std::size_t cap) {
  if (!c.satisfied_by(g, t_ini.edges()) || !c.satisfied_by(g, t_tar.edges()))
    throw std::invalid_argument("input tree violates " + c.to_string());
  FlipGraph fg(g, c, cap);
  auto a = fg.index_of(t_ini.edges());
  auto b = fg.index_of(t_tar.edges());
  OracleAnswer ans;
  auto path = fg.shortest_path(*a, *b);
  if (!path) return ans;
  ans.reachable = true;
  ReconfSequence seq(c, t_ini);
  for (std::size_t i = 1; i < path->size(); ++i) {
    const EdgeSet& prev = fg.tree((*path)[i - 1]);
    const EdgeSet& next = fg.tree((*path)[i]);
    seq.push(edge_set_difference(prev, next).front(), edge_set_difference(next, prev).front());
  }
  ans.sequence = std::move(seq);
  return ans;
}

std::vector<EdgeSet> enumerate_pseudotrees(const Graph& g) {
  int n = g.vertex_count();
  int m = g.edge_count();
  std::vector<EdgeSet> out;
  for (int k : {n - 1, n}) {
    if (k < 0 || k > m) continue;
    // Lexicographic combinations of k edge ids.
    std::vector<EdgeId> comb(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
      if (is_pseudotree(g, comb)) out.push_back(comb);
      int i = k - 1;
      while (i >= 0 && comb[static_cast<std::size_t>(i)] == m - k + i + 1) --i;
      if (i < 0) break;
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

namespace {

bool point_on(const Graph& g, const EdgeSet& q, const Point& p) {
  if (p.is_vertex()) return g.valid_vertex(p.id);
  return edge_set_contains(q, p.id);
}

HalfDist max_center_ecc(const Graph& g, const EdgeSet& q, const Point& r1, const Point& r2) {
  Subgraph sub(g, q);
  return std::max(eccentricity_half(sub, r1), eccentricity_half(sub, r2));
}

// Lex-minimal length over every simple path from s to each vertex of q.
std::vector<std::optional<LexLen>> simple_path_minima(const Subgraph& q, VertexId s) {
  int n = q.host().vertex_count();
  std::vector<std::optional<LexLen>> best(static_cast<std::size_t>(n));
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  auto dfs = [&](auto&& self, VertexId v, const LexLen& len) -> void {
    auto& b = best[static_cast<std::size_t>(v)];
    if (!b || len < *b) b = len;
    on[static_cast<std::size_t>(v)] = 1;
    for (const auto& inc : q.incident(v))
      if (!on[static_cast<std::size_t>(inc.neighbor)]) self(self, inc.neighbor, len + LexLen::edge(inc.edge));
    on[static_cast<std::size_t>(v)] = 0;
  };
  dfs(dfs, s, LexLen{});
  return best;
}

std::vector<LexLen> point_lex_by_paths(const Subgraph& q, const Point& r) {
  const Graph& g = q.host();
  int n = g.vertex_count();
  std::vector<LexLen> out(static_cast<std::size_t>(n));
  std::vector<std::pair<VertexId, LexLen>> starts;
  if (r.is_vertex()) {
    starts.emplace_back(r.id, LexLen{});
  } else {
    starts.emplace_back(g.edge(r.id).u, LexLen::half_edge(r.id));
    starts.emplace_back(g.edge(r.id).v, LexLen::half_edge(r.id));
  }
  std::vector<std::optional<LexLen>> best(static_cast<std::size_t>(n));
  for (auto& [s, off] : starts) {
    auto part = simple_path_minima(q, s);
    for (VertexId v = 0; v < n; ++v) {
      if (!part[static_cast<std::size_t>(v)]) continue;
      LexLen cand = off + *part[static_cast<std::size_t>(v)];
      auto& b = best[static_cast<std::size_t>(v)];
      if (!b || cand < *b) b = cand;
    }
  }
  for (VertexId v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = *best[static_cast<std::size_t>(v)];
  return out;
}

bool on_cycle(const Graph& g, const EdgeSet& q, const Point& p) {
  auto cycle_edge = [&](EdgeId e) {
    EdgeSet rest;
    for (EdgeId x : q)
      if (x != e) rest.push_back(x);
    return Subgraph(g, rest).is_connected();
  };
  if (p.is_mid()) return cycle_edge(p.id);
  for (const auto& inc : g.incident(p.id))
    if (edge_set_contains(q, inc.edge) && cycle_edge(inc.edge)) return true;
  return false;
}

}  // namespace

std::optional<int> oracle_good_triple_need(const Graph& g, const EdgeSet& q, const Point& r1, const Point& r2) {
  if (r1 == r2 || !point_on(g, q, r1) || !point_on(g, q, r2)) return std::nullopt;
  Subgraph sub(g, q);
  if (static_cast<int>(q.size()) == g.vertex_count()) {
    if (!on_cycle(g, q, r1) || !on_cycle(g, q, r2)) return std::nullopt;
  }
  auto d1 = point_lex_by_paths(sub, r1);
  auto d2 = point_lex_by_paths(sub, r2);
  int n = g.vertex_count();
  std::vector<LexLen> lambda(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v)
    lambda[static_cast<std::size_t>(v)] = std::max(d1[static_cast<std::size_t>(v)], d2[static_cast<std::size_t>(v)]);
  for (EdgeId e = 1; e <= g.edge_count(); ++e) {
    const LexLen& a = lambda[static_cast<std::size_t>(g.edge(e).u)];
    const LexLen& b = lambda[static_cast<std::size_t>(g.edge(e).v)];
    if (a > b + LexLen::edge(e) || b > a + LexLen::edge(e)) return std::nullopt;
  }
  return max_center_ecc(g, q, r1, r2);
}

std::optional<EdgeSet> oracle_good_triple(const Graph& g, int d, const Point& r1, const Point& r2) {
  for (const auto& q : enumerate_pseudotrees(g)) {
    auto need = oracle_good_triple_need(g, q, r1, r2);
    if (need && *need <= d) return q;
  }
  return std::nullopt;
}

bool oracle_center_pair(const Graph& g, int d, const Point& r1, const Point& r2) {
  if (r1 == r2) return false;
  for (const auto& q : enumerate_pseudotrees(g)) {
    if (!point_on(g, q, r1) || !point_on(g, q, r2)) continue;
    if (max_center_ecc(g, q, r1, r2) <= d) return true;
  }
  return false;
}

std::vector<char> oracle_degree_pairs(const Graph& g, int d, std::size_t cap) {
  int n = g.vertex_count();
  std::vector<char> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for_each_spanning_tree(
      g,
      [&](const EdgeSet& t) {
        auto deg = degrees_of(g, t);
        std::vector<char> high(static_cast<std::size_t>(n), 0);
        std::vector<char> reach(static_cast<std::size_t>(n), 0);
        for (VertexId v = 0; v < n; ++v)
          high[static_cast<std::size_t>(v)] = reach[static_cast<std::size_t>(v)] = deg[static_cast<std::size_t>(v)] >= d;
        for (auto& [step, next] : flip_neighbors(g, t)) {
          auto nd = degrees_of(g, next);
          for (VertexId v = 0; v < n; ++v)
            if (nd[static_cast<std::size_t>(v)] >= d) reach[static_cast<std::size_t>(v)] = 1;
        }
        for (VertexId u = 0; u < n; ++u) {
          if (!high[static_cast<std::size_t>(u)]) continue;
          for (VertexId v = 0; v < n; ++v)
            if (reach[static_cast<std::size_t>(v)]) out[static_cast<std::size_t>(u) * n + v] = 1;
        }
      },
      cap);
  return out;
}

bool oracle_degree_pair(const Graph& g, int d, VertexId u, VertexId v, std::size_t cap) {
  if (u == v) return false;
  return oracle_degree_pairs(g, d, cap)[static_cast<std::size_t>(u) * g.vertex_count() + v] != 0;
}

std::optional<std::vector<VertexId>> oracle_hampath(const Graph& g, VertexId s, VertexId t) {
  int n = g.vertex_count();
  if (!g.valid_vertex(s) || !g.valid_vertex(t)) return std::nullopt;
  if (n == 1) return s == t ? std::optional(std::vector<VertexId>{s}) : std::nullopt;
  if (s == t) return std::nullopt;
  std::vector<VertexId> path{s};
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  used[static_cast<std::size_t>(s)] = 1;
  auto dfs = [&](auto&& self, VertexId v) -> bool {
    if (static_cast<int>(path.size()) == n) return v == t;
    for (const auto& inc : g.incident(v)) {
      VertexId w = inc.neighbor;
      if (used[static_cast<std::size_t>(w)]) continue;
      if (w == t && static_cast<int>(path.size()) + 1 != n) continue;
      used[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      if (self(self, w)) return true;
      path.pop_back();
      used[static_cast<std::size_t>(w)] = 0;
    }
    return false;
  };
  if (dfs(dfs, s)) return path;
  return std::nullopt;
}

}  // namespace rst
