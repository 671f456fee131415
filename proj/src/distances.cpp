#include "rst/distances.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace rst {

Subgraph::Subgraph(const Graph& g)
    : g_(&g), in_(static_cast<std::size_t>(g.edge_count() + 1), 1),
      adj_(static_cast<std::size_t>(g.vertex_count())) {
  in_[0] = 0;
  edges_.reserve(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 1; e <= g.edge_count(); ++e) edges_.push_back(e);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident(v);
    adj_[static_cast<std::size_t>(v)].assign(inc.begin(), inc.end());
  }
}

Subgraph::Subgraph(const Graph& g, EdgeSet edges)
    : g_(&g), edges_(std::move(edges)), in_(static_cast<std::size_t>(g.edge_count() + 1), 0),
      adj_(static_cast<std::size_t>(g.vertex_count())) {
  for (EdgeId e : edges_) {
    if (!g.valid_edge(e)) throw std::invalid_argument("edge id out of range: " + std::to_string(e));
    in_[static_cast<std::size_t>(e)] = 1;
    const Edge& ed = g.edge(e);
    adj_[static_cast<std::size_t>(ed.u)].push_back({ed.v, e});
    adj_[static_cast<std::size_t>(ed.v)].push_back({ed.u, e});
  }
}

bool Subgraph::has_point(const Point& p) const {
  if (p.is_vertex()) return g_->valid_vertex(p.id);
  return g_->valid_edge(p.id) && contains(p.id);
}

bool Subgraph::is_connected() const {
  int n = g_->vertex_count();
  if (n <= 1) return true;
  auto dist = point_distances_half(*this, Point::vertex(0));
  for (VertexId v = 0; v < n; ++v)
    if (dist[static_cast<std::size_t>(v)] == kUnreachable) return false;
  return true;
}

namespace {

// Vertex-only BFS in half units from the given seeds.
std::vector<HalfDist> bfs_half(const Subgraph& h, std::span<const std::pair<VertexId, HalfDist>> seeds) {
  int n = h.host().vertex_count();
  std::vector<HalfDist> dist(static_cast<std::size_t>(n), kUnreachable);
  std::queue<VertexId> q;
  for (auto [v, d] : seeds) {
    dist[static_cast<std::size_t>(v)] = d;
    q.push(v);
  }
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (const auto& inc : h.incident(v)) {
      auto& dn = dist[static_cast<std::size_t>(inc.neighbor)];
      if (dn == kUnreachable) {
        dn = dist[static_cast<std::size_t>(v)] + 2;
        q.push(inc.neighbor);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<HalfDist> point_distances_half(const Subgraph& h, const Point& p) {
  if (!h.has_point(p)) throw std::invalid_argument("point " + to_string(p) + " is not on the subgraph");
  const Graph& g = h.host();
  std::vector<std::pair<VertexId, HalfDist>> seeds;
  if (p.is_vertex()) {
    seeds.emplace_back(p.id, 0);
  } else {
    seeds.emplace_back(g.edge(p.id).u, 1);
    seeds.emplace_back(g.edge(p.id).v, 1);
  }
  auto vd = bfs_half(h, seeds);
  std::vector<HalfDist> out(static_cast<std::size_t>(point_count(g)), kUnreachable);
  std::copy(vd.begin(), vd.end(), out.begin());
  for (EdgeId e : h.edges()) {
    HalfDist a = vd[static_cast<std::size_t>(g.edge(e).u)];
    HalfDist b = vd[static_cast<std::size_t>(g.edge(e).v)];
    HalfDist m = std::min(a, b);
    out[static_cast<std::size_t>(point_index(g, Point::mid(e)))] = m == kUnreachable ? kUnreachable : m + 1;
  }
  if (p.is_mid()) out[static_cast<std::size_t>(point_index(g, p))] = 0;
  return out;
}

std::vector<HalfDist> all_pairs_half(const Subgraph& h) {
  int n = h.host().vertex_count();
  std::vector<HalfDist> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (VertexId s = 0; s < n; ++s) {
    std::pair<VertexId, HalfDist> seed{s, 0};
    auto row = bfs_half(h, std::span(&seed, 1));
    std::copy(row.begin(), row.end(), out.begin() + static_cast<std::ptrdiff_t>(s) * n);
  }
  return out;
}

HalfDist eccentricity_half(const Subgraph& h, const Point& p) {
  auto dist = point_distances_half(h, p);
  int n = h.host().vertex_count();
  return *std::max_element(dist.begin(), dist.begin() + n);
}

HalfDist diameter_half(const Subgraph& h) {
  auto apsp = all_pairs_half(h);
  return apsp.empty() ? 0 : *std::max_element(apsp.begin(), apsp.end());
}

std::vector<Point> center_points(const Subgraph& q, int d) {
  const Graph& g = q.host();
  int n = g.vertex_count();
  auto apsp = all_pairs_half(q);
  auto at = [&](VertexId a, VertexId b) { return apsp[static_cast<std::size_t>(a) * n + b]; };
  std::vector<Point> out;
  for (VertexId v = 0; v < n; ++v) {
    HalfDist ecc = 0;
    for (VertexId w = 0; w < n; ++w) ecc = std::max(ecc, at(v, w));
    if (ecc <= d) out.push_back(Point::vertex(v));
  }
  for (EdgeId e : q.edges()) {
    HalfDist ecc = 0;
    for (VertexId w = 0; w < n; ++w) {
      HalfDist m = std::min(at(g.edge(e).u, w), at(g.edge(e).v, w));
      ecc = std::max(ecc, m == kUnreachable ? kUnreachable : m + 1);
    }
    if (ecc <= d) out.push_back(Point::mid(e));
  }
  return out;
}

std::vector<EdgeId> forest_path(const Subgraph& forest, VertexId a, VertexId b) {
  if (a == b) return {};
  int n = forest.host().vertex_count();
  std::vector<EdgeId> via(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> prev(static_cast<std::size_t>(n), -1);
  std::queue<VertexId> q;
  q.push(a);
  prev[static_cast<std::size_t>(a)] = a;
  while (!q.empty() && prev[static_cast<std::size_t>(b)] < 0) {
    VertexId v = q.front();
    q.pop();
    for (const auto& inc : forest.incident(v)) {
      if (prev[static_cast<std::size_t>(inc.neighbor)] < 0) {
        prev[static_cast<std::size_t>(inc.neighbor)] = v;
        via[static_cast<std::size_t>(inc.neighbor)] = inc.edge;
        q.push(inc.neighbor);
      }
    }
  }
  if (prev[static_cast<std::size_t>(b)] < 0) return {};
  std::vector<EdgeId> path;
  for (VertexId v = b; v != a; v = prev[static_cast<std::size_t>(v)])
    path.push_back(via[static_cast<std::size_t>(v)]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<Cycle> unique_cycle(const Subgraph& q) {
  const Graph& g = q.host();
  UnionFind uf(g.vertex_count());
  EdgeSet forest;
  for (EdgeId e : q.edges()) {
    const Edge& ed = g.edge(e);
    if (uf.unite(ed.u, ed.v)) {
      forest.push_back(e);
      continue;
    }
    Subgraph f(g, forest);
    Cycle c;
    c.edges = forest_path(f, ed.u, ed.v);
    VertexId v = ed.u;
    c.vertices.push_back(v);
    for (EdgeId pe : c.edges) {
      v = g.edge(pe).other(v);
      c.vertices.push_back(v);
    }
    c.edges.push_back(e);
    return c;
  }
  return std::nullopt;
}

void LexGraph::add_edge(int id, VertexId a, VertexId b, const LexLen& w) {
  adj[static_cast<std::size_t>(a)].push_back({b, id, w});
  adj[static_cast<std::size_t>(b)].push_back({a, id, w});
}

LexGraph perturbed_graph(const Subgraph& h) {
  const Graph& g = h.host();
  LexGraph lg(g.vertex_count());
  for (EdgeId e : h.edges()) lg.add_edge(e, g.edge(e).u, g.edge(e).v, LexLen::edge(e));
  return lg;
}

LexTree lex_shortest_tree(const LexGraph& g, std::span<const LexSeed> seeds) {
  int n = g.vertex_count();
  LexTree t;
  t.dist.assign(static_cast<std::size_t>(n), std::nullopt);
  t.parent_edge.assign(static_cast<std::size_t>(n), 0);
  std::vector<char> done(static_cast<std::size_t>(n), 0);

  struct Item {
    LexLen d;
    VertexId v;
  };
  auto worse = [](const Item& a, const Item& b) { return a.d > b.d || (a.d == b.d && a.v > b.v); };
  std::priority_queue<Item, std::vector<Item>, decltype(worse)> pq(worse);

  auto offer = [&](VertexId v, const LexLen& d, int via) {
    auto& cur = t.dist[static_cast<std::size_t>(v)];
    auto& par = t.parent_edge[static_cast<std::size_t>(v)];
    if (!cur || d < *cur) {
      cur = d;
      par = via;
      pq.push({d, v});
    } else if (d == *cur) {
      t.tie_seen = true;
      if (!done[static_cast<std::size_t>(v)] && via < par) par = via;
    }
  };
  for (const auto& s : seeds) offer(s.vertex, s.dist, s.via);
  while (!pq.empty()) {
    Item it = pq.top();
    pq.pop();
    if (done[static_cast<std::size_t>(it.v)] || it.d != *t.dist[static_cast<std::size_t>(it.v)]) continue;
    done[static_cast<std::size_t>(it.v)] = 1;
    for (const auto& arc : g.adj[static_cast<std::size_t>(it.v)]) {
      if (done[static_cast<std::size_t>(arc.to)]) continue;
      offer(arc.to, it.d + arc.weight, arc.edge);
    }
  }
  return t;
}

std::vector<LexSeed> point_seeds(const Graph& g, const Point& p) {
  if (p.is_vertex()) return {LexSeed{p.id, LexLen{}, 0}};
  const Edge& e = g.edge(p.id);
  return {LexSeed{e.u, LexLen::half_edge(p.id), p.id}, LexSeed{e.v, LexLen::half_edge(p.id), p.id}};
}

LexTree lex_point_tree(const Subgraph& h, const Point& p) {
  if (!h.has_point(p)) throw std::invalid_argument("point " + to_string(p) + " is not on the subgraph");
  auto seeds = point_seeds(h.host(), p);
  return lex_shortest_tree(perturbed_graph(h), seeds);
}

std::optional<LexLen> lex_distance_to(const Graph& g, const LexTree& from, const Point& source,
                                      const Point& q) {
  if (source == q) return LexLen{};
  if (q.is_vertex()) return from.dist[static_cast<std::size_t>(q.id)];
  const Edge& e = g.edge(q.id);
  const auto& a = from.dist[static_cast<std::size_t>(e.u)];
  const auto& b = from.dist[static_cast<std::size_t>(e.v)];
  if (!a && !b) return std::nullopt;
  const LexLen& best = !a ? *b : !b ? *a : std::min(*a, *b);
  return best + LexLen::half_edge(q.id);
}

std::optional<LexLen> lex_point_distance(const Subgraph& h, const Point& p, const Point& q) {
  if (!h.has_point(q)) throw std::invalid_argument("point " + to_string(q) + " is not on the subgraph");
  return lex_distance_to(h.host(), lex_point_tree(h, p), p, q);
}

}  // namespace rst
