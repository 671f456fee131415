#include "rst/diameter.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <thread>

namespace rst {

namespace {

using Mask = std::vector<std::uint64_t>;

void set_bit(Mask& m, int i) { m[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
bool test_bit(const Mask& m, int i) { return (m[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1U; }
bool disjoint(const Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return false;
  return true;
}

bool contains_point(const Cycle& c, const Point& p) {
  if (p.is_vertex()) return std::find(c.vertices.begin(), c.vertices.end(), p.id) != c.vertices.end();
  return std::find(c.edges.begin(), c.edges.end(), p.id) != c.edges.end();
}

bool contains(const std::vector<Point>& pts, const Point& p) {
  return std::find(pts.begin(), pts.end(), p) != pts.end();
}

// Edges of a shortest-path forest: the parent edges of all reached vertices.
EdgeSet parent_edges(const LexTree& t, int n, int max_id) {
  std::vector<EdgeId> out;
  for (int v = 0; v < n; ++v) {
    int pe = t.parent_edge[static_cast<std::size_t>(v)];
    if (pe != 0 && pe <= max_id) out.push_back(pe);
  }
  return make_edge_set(std::move(out));
}

// Perturbed distances from point r to every cycle position, along the cycle.
std::vector<LexLen> cycle_distances(const Cycle& c, const Point& r) {
  std::size_t k = c.vertices.size();
  std::vector<std::optional<LexLen>> best(k);
  auto relax = [&](std::size_t start, LexLen base, int step) {
    std::size_t pos = start;
    LexLen cur = std::move(base);
    for (std::size_t i = 0; i < k; ++i) {
      if (!best[pos] || cur < *best[pos]) best[pos] = cur;
      std::size_t edge_pos = step > 0 ? pos : (pos + k - 1) % k;
      cur += LexLen::edge(c.edges[edge_pos]);
      pos = step > 0 ? (pos + 1) % k : (pos + k - 1) % k;
    }
  };
  if (r.is_vertex()) {
    std::size_t at = static_cast<std::size_t>(std::find(c.vertices.begin(), c.vertices.end(), r.id) - c.vertices.begin());
    relax(at, LexLen{}, +1);
    relax(at, LexLen{}, -1);
  } else {
    std::size_t j = static_cast<std::size_t>(std::find(c.edges.begin(), c.edges.end(), r.id) - c.edges.begin());
    // Edge j joins positions j and j+1.
    relax((j + 1) % k, LexLen::half_edge(r.id), +1);
    relax(j, LexLen::half_edge(r.id), -1);
  }
  std::vector<LexLen> out;
  out.reserve(k);
  for (auto& b : best) out.push_back(std::move(*b));
  return out;
}

}  // namespace

LambdaLabels lambda_labels(const Graph& g, const EdgeSet& q, const Point& r1, const Point& r2) {
  Subgraph sub(g, q);
  auto a = lex_point_tree(sub, r1);
  auto b = lex_point_tree(sub, r2);
  LambdaLabels out;
  out.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& x = a.dist[static_cast<std::size_t>(v)];
    const auto& y = b.dist[static_cast<std::size_t>(v)];
    if (!x || !y) throw std::invalid_argument("subgraph is not connected");
    out.push_back(std::max(*x, *y));
  }
  return out;
}

std::optional<int> good_triple_need(const Graph& g, const EdgeSet& q, const Point& r1, const Point& r2) {
  if (r1 == r2 || !is_pseudotree(g, q)) return std::nullopt;
  Subgraph sub(g, q);
  if (!sub.has_point(r1) || !sub.has_point(r2)) return std::nullopt;
  if (auto c = unique_cycle(sub)) {
    if (!contains_point(*c, r1) || !contains_point(*c, r2)) return std::nullopt;
  }
  auto lambda = lambda_labels(g, q, r1, r2);
  for (EdgeId e = 1; e <= g.edge_count(); ++e) {
    const LexLen& a = lambda[static_cast<std::size_t>(g.edge(e).u)];
    const LexLen& b = lambda[static_cast<std::size_t>(g.edge(e).v)];
    LexLen w = LexLen::edge(e);
    if (a > b + w || b > a + w) return std::nullopt;
  }
  return std::max(eccentricity_half(sub, r1), eccentricity_half(sub, r2));
}

bool is_good_triple(const Graph& g, int d, const Point& r1, const Point& r2, const EdgeSet& q) {
  auto need = good_triple_need(g, q, r1, r2);
  return need && *need <= d;
}

GoodTripleSearch::GoodTripleSearch(const Graph& g) : g_(&g) {
  if (!g.is_connected()) throw std::invalid_argument("graph is not connected");
  int n = g.vertex_count();
  int m = g.edge_count();
  words_v_ = static_cast<std::size_t>(n + 63) / 64;
  words_e_ = static_cast<std::size_t>(m + 1 + 63) / 64;
  Subgraph whole(g);
  LexGraph lg = perturbed_graph(whole);

  point_dist_.resize(static_cast<std::size_t>(point_count(g)));
  std::vector<LexTree> vertex_trees;
  for (int i = 0; i < point_count(g); ++i) {
    Point p = point_at(g, i);
    auto seeds = point_seeds(g, p);
    LexTree t = lex_shortest_tree(lg, seeds);
    auto& row = point_dist_[static_cast<std::size_t>(i)];
    for (VertexId v = 0; v < n; ++v) row.push_back(*t.dist[static_cast<std::size_t>(v)]);
    if (p.is_vertex()) vertex_trees.push_back(std::move(t));
  }

  std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  sp_vertices_.resize(nn);
  sp_edges_.resize(nn);
  for (VertexId x = 0; x < n; ++x) {
    const LexTree& t = vertex_trees[static_cast<std::size_t>(x)];
    for (VertexId y = 0; y < n; ++y) {
      std::vector<VertexId> vs{y};
      std::vector<EdgeId> es;
      for (VertexId v = y; v != x;) {
        EdgeId pe = t.parent_edge[static_cast<std::size_t>(v)];
        es.push_back(pe);
        v = g.edge(pe).other(v);
        vs.push_back(v);
      }
      std::reverse(vs.begin(), vs.end());
      std::reverse(es.begin(), es.end());
      sp_vertices_[static_cast<std::size_t>(x) * n + y] = std::move(vs);
      sp_edges_[static_cast<std::size_t>(x) * n + y] = std::move(es);
    }
  }

  // Candidate walks between every ordered vertex pair: the shortest path
  // itself, then shortest path + guessed edge + shortest path when simple.
  walks_.resize(nn);
  auto make_walk = [&](std::vector<VertexId> vs, std::vector<EdgeId> es, EdgeId f) -> std::optional<Walk> {
    Walk w{std::move(vs), std::move(es), Mask(words_v_, 0), Mask(words_e_, 0), f};
    for (VertexId v : w.vertices) {
      if (test_bit(w.vmask, v)) return std::nullopt;
      set_bit(w.vmask, v);
    }
    for (EdgeId e : w.edges) set_bit(w.emask, e);
    return w;
  };
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      auto& list = walks_[static_cast<std::size_t>(a) * n + b];
      const auto& base_v = sp_vertices_[static_cast<std::size_t>(a) * n + b];
      const auto& base_e = sp_edges_[static_cast<std::size_t>(a) * n + b];
      list.push_back(*make_walk(base_v, base_e, 0));
      for (EdgeId f = 1; f <= m; ++f) {
        for (int orient = 0; orient < 2; ++orient) {
          VertexId u = orient == 0 ? g.edge(f).u : g.edge(f).v;
          VertexId u2 = g.edge(f).other(u);
          std::vector<VertexId> vs = sp_vertices_[static_cast<std::size_t>(a) * n + u];
          std::vector<EdgeId> es = sp_edges_[static_cast<std::size_t>(a) * n + u];
          es.push_back(f);
          const auto& tail_v = sp_vertices_[static_cast<std::size_t>(u2) * n + b];
          const auto& tail_e = sp_edges_[static_cast<std::size_t>(u2) * n + b];
          vs.insert(vs.end(), tail_v.begin(), tail_v.end());
          es.insert(es.end(), tail_e.begin(), tail_e.end());
          if (auto w = make_walk(std::move(vs), std::move(es), f)) list.push_back(std::move(*w));
        }
      }
    }
  }
}

const LexLen& GoodTripleSearch::dist(const Point& p, VertexId v) const {
  return point_dist_[static_cast<std::size_t>(point_index(*g_, p))][static_cast<std::size_t>(v)];
}

const std::vector<VertexId>& GoodTripleSearch::shortest_path_vertices(VertexId x, VertexId y) const {
  return sp_vertices_[static_cast<std::size_t>(x) * g_->vertex_count() + y];
}

void GoodTripleSearch::search_trees(const Point& r1, const Point& r2, Stats* stats, const Visitor& visit) const {
  const Graph& g = *g_;
  int n = g.vertex_count();
  int m = g.edge_count();
  LexGraph base(n + 1);
  for (EdgeId e = 1; e <= m; ++e) base.add_edge(e, g.edge(e).u, g.edge(e).v, LexLen::edge(e));
  const VertexId r = n;
  LexSeed seed{r, LexLen{}, 0};

  for (EdgeId e = 1; e <= m; ++e) {
    for (int orient = 0; orient < 2; ++orient) {
      VertexId v1 = orient == 0 ? g.edge(e).u : g.edge(e).v;
      VertexId v2 = g.edge(e).other(v1);
      LexLen w1 = r2 == Point::mid(e) ? LexLen::half_edge(e) : dist(r2, v2) + LexLen::edge(e);
      LexLen w2 = r1 == Point::mid(e) ? LexLen::half_edge(e) : dist(r1, v1) + LexLen::edge(e);
      if (stats) ++stats->guesses;
      // Tied shortest paths make the tree depend on the labels of the new
      // edges, so the swapped labelling is tried as well.
      for (int swap = 0; swap < 2; ++swap) {
        LexGraph gp = base;
        gp.add_edge(m + 1 + swap, r, v1, w1);
        gp.add_edge(m + 2 - swap, r, v2, w2);
        LexTree t = lex_shortest_tree(gp, std::span(&seed, 1));
        if (stats) ++stats->shortest_path_runs;
        if (t.tie_seen && stats) ++stats->ties;
        EdgeSet q = parent_edges(t, n, m);
        q = edge_set_union(q, {e});
        if (static_cast<int>(q.size()) == n - 1 && validate_spanning_tree(g, q)) {
          if (auto need = good_triple_need(g, q, r1, r2); need && visit(q, *need)) return;
        }
        if (!t.tie_seen) break;
      }
    }
  }
}

void GoodTripleSearch::search_cyclic(const Point& r1, const Point& r2, Stats* stats, const Visitor& visit) const {
  const Graph& g = *g_;
  int n = g.vertex_count();
  int m = g.edge_count();
  LexGraph base(n + 1);
  for (EdgeId e = 1; e <= m; ++e) base.add_edge(e, g.edge(e).u, g.edge(e).v, LexLen::edge(e));
  const VertexId r = n;
  LexSeed seed{r, LexLen{}, 0};

  auto on_cycle = [&](const Point& p, const Mask& vm, const Mask& em, EdgeId e, EdgeId e2) {
    if (p.is_vertex()) return test_bit(vm, p.id);
    return p.id == e || p.id == e2 || test_bit(em, p.id);
  };
  Mask vm(words_v_), em(words_e_);

  // e and e' are the two cycle edges holding the r1-r2 midpoints; the pair
  // is taken with idx(e) < idx(e'), the mirrored guess describing the same cycle.
  for (EdgeId e = 1; e <= m; ++e) {
    for (EdgeId e2 = e + 1; e2 <= m; ++e2) {
      for (int oe = 0; oe < 2; ++oe) {
        VertexId v1 = oe == 0 ? g.edge(e).u : g.edge(e).v;
        VertexId v2 = g.edge(e).other(v1);
        for (int oe2 = 0; oe2 < 2; ++oe2) {
          VertexId v1p = oe2 == 0 ? g.edge(e2).u : g.edge(e2).v;
          VertexId v2p = g.edge(e2).other(v1p);
          const auto& list1 = walks(v1, v1p);
          const auto& list2 = walks(v2, v2p);
          for (const Walk& j1 : list1) {
            for (const Walk& j2 : list2) {
              if (stats) ++stats->guesses;
              if (!disjoint(j1.vmask, j2.vmask)) continue;
              for (std::size_t i = 0; i < words_v_; ++i) vm[i] = j1.vmask[i] | j2.vmask[i];
              for (std::size_t i = 0; i < words_e_; ++i) em[i] = j1.emask[i] | j2.emask[i];
              if (!on_cycle(r1, vm, em, e, e2) || !on_cycle(r2, vm, em, e, e2)) continue;

              // C = J1, e', reverse(J2), e.
              Cycle c;
              c.vertices = j1.vertices;
              c.vertices.insert(c.vertices.end(), j2.vertices.rbegin(), j2.vertices.rend());
              c.edges = j1.edges;
              c.edges.push_back(e2);
              c.edges.insert(c.edges.end(), j2.edges.rbegin(), j2.edges.rend());
              c.edges.push_back(e);
              std::size_t k = c.vertices.size();
              std::size_t p_v1 = 0;
              std::size_t p_v1p = j1.vertices.size() - 1;
              std::size_t p_v2p = j1.vertices.size();
              std::size_t p_v2 = k - 1;
              auto c1 = cycle_distances(c, r1);
              auto c2 = cycle_distances(c, r2);
              // Both guessed edges must switch from the r1 side to the r2 side.
              if (!(c1[p_v1] < c2[p_v1] && c1[p_v2] > c2[p_v2])) continue;
              if (!(c1[p_v1p] < c2[p_v1p] && c1[p_v2p] > c2[p_v2p])) continue;

              LexLen w1 = r2 == Point::mid(e) ? LexLen::half_edge(e) : c2[p_v2] + LexLen::edge(e);
              LexLen w2 = r1 == Point::mid(e) ? LexLen::half_edge(e) : c1[p_v1] + LexLen::edge(e);
              LexLen w1p = r2 == Point::mid(e2) ? LexLen::half_edge(e2) : c2[p_v2p] + LexLen::edge(e2);
              LexLen w2p = r1 == Point::mid(e2) ? LexLen::half_edge(e2) : c1[p_v1p] + LexLen::edge(e2);

              EdgeSet extra{e, e2};
              if (j1.f) extra.push_back(j1.f);
              if (j2.f) extra.push_back(j2.f);
              extra = make_edge_set(std::move(extra));

              // Labellings of the four new edges: as guessed, roles swapped,
              // e/e' swapped, both. Only tried further when ties occurred.
              static constexpr int kLabels[4][4] = {{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}};
              for (const auto& lab : kLabels) {
                LexGraph gp = base;
                gp.add_edge(m + lab[0], r, v1, w1);
                gp.add_edge(m + lab[1], r, v2, w2);
                gp.add_edge(m + lab[2], r, v1p, w1p);
                gp.add_edge(m + lab[3], r, v2p, w2p);
                LexTree t = lex_shortest_tree(gp, std::span(&seed, 1));
                if (stats) ++stats->shortest_path_runs;
                if (t.tie_seen && stats) ++stats->ties;
                EdgeSet q = edge_set_union(parent_edges(t, n, m), extra);
                if (static_cast<int>(q.size()) == n && is_pseudotree(g, q)) {
                  if (auto need = good_triple_need(g, q, r1, r2); need && visit(q, *need)) return;
                }
                if (!t.tie_seen) break;
              }
            }
          }
        }
      }
    }
  }
}

std::optional<EdgeSet> GoodTripleSearch::find_good_tree(int d, const Point& r1, const Point& r2,
                                                        Stats* stats) const {
  if (r1 == r2) return std::nullopt;
  std::optional<EdgeSet> out;
  search_trees(r1, r2, stats, [&](const EdgeSet& q, int need) {
    if (need > d) return false;
    out = q;
    return true;
  });
  return out;
}

std::optional<EdgeSet> GoodTripleSearch::find_good_cyclic_pseudotree(int d, const Point& r1, const Point& r2,
                                                                     Stats* stats) const {
  if (r1 == r2) return std::nullopt;
  std::optional<EdgeSet> out;
  search_cyclic(r1, r2, stats, [&](const EdgeSet& q, int need) {
    if (need > d) return false;
    out = q;
    return true;
  });
  return out;
}

std::optional<EdgeSet> GoodTripleSearch::find(int d, const Point& r1, const Point& r2, Stats* stats) const {
  if (auto q = find_good_tree(d, r1, r2, stats)) return q;
  return find_good_cyclic_pseudotree(d, r1, r2, stats);
}

std::vector<GoodTripleSearch::Candidate> GoodTripleSearch::candidates(const Point& r1, const Point& r2,
                                                                      Stats* stats) const {
  std::vector<Candidate> out;
  if (r1 == r2) return out;
  std::set<EdgeSet> seen;
  auto collect = [&](bool cyclic) {
    return [&, cyclic](const EdgeSet& q, int need) {
      if (seen.insert(q).second) out.push_back({q, need, cyclic});
      return false;
    };
  };
  search_trees(r1, r2, stats, collect(false));
  search_cyclic(r1, r2, stats, collect(true));
  return out;
}

std::optional<EdgeSet> find_good_tree(const Graph& g, int d, const Point& r1, const Point& r2) {
  return GoodTripleSearch(g).find_good_tree(d, r1, r2);
}

std::optional<EdgeSet> find_good_cyclic_pseudotree(const Graph& g, int d, const Point& r1, const Point& r2) {
  return GoodTripleSearch(g).find_good_cyclic_pseudotree(d, r1, r2);
}

std::vector<Point> all_points(const Graph& g) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(point_count(g)));
  for (int i = 0; i < point_count(g); ++i) out.push_back(point_at(g, i));
  return out;
}

namespace {

std::vector<char> eligible_points(const Graph& g, int d) {
  Subgraph whole(g);
  auto apsp = all_pairs_half(whole);
  int n = g.vertex_count();
  std::vector<char> out(static_cast<std::size_t>(point_count(g)), 0);
  for (int i = 0; i < point_count(g); ++i) {
    Point p = point_at(g, i);
    HalfDist ecc = 0;
    for (VertexId w = 0; w < n; ++w) {
      HalfDist x = p.is_vertex() ? apsp[static_cast<std::size_t>(p.id) * n + w]
                                 : 1 + std::min(apsp[static_cast<std::size_t>(g.edge(p.id).u) * n + w],
                                                apsp[static_cast<std::size_t>(g.edge(p.id).v) * n + w]);
      ecc = std::max(ecc, x);
    }
    out[static_cast<std::size_t>(i)] = ecc <= d;
  }
  return out;
}

}  // namespace

CenterPairTable::CenterPairTable(const GoodTripleSearch& search, int max_d, int jobs)
    : search_(&search), max_d_(max_d) {
  const Graph& g = search.graph();
  auto ok = eligible_points(g, max_d);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < point_count(g); ++a)
    for (int b = a + 1; b < point_count(g); ++b)
      if (ok[static_cast<std::size_t>(a)] && ok[static_cast<std::size_t>(b)]) pairs.emplace_back(a, b);
  std::vector<Entry> results(pairs.size());
  auto work = [&](std::size_t offset, std::size_t stride) {
    for (std::size_t i = offset; i < pairs.size(); i += stride) {
      for (auto& c : search.candidates(point_at(g, pairs[i].first), point_at(g, pairs[i].second))) {
        if (c.need > max_d) continue;
        (c.cyclic ? results[i].cyclic : results[i].trees).push_back(std::move(c));
      }
    }
  };
  std::size_t threads = static_cast<std::size_t>(std::max(jobs, 1));
  if (threads == 1 || pairs.size() < 2) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < threads; ++j) pool.emplace_back(work, j, threads);
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (!results[i].trees.empty() || !results[i].cyclic.empty()) entries_.emplace(pairs[i], std::move(results[i]));
}

std::optional<EdgeSet> CenterPairTable::witness(int d, int a, int b) const {
  if (d > max_d_) throw std::invalid_argument("bound exceeds the table's range");
  if (a > b) std::swap(a, b);
  auto it = entries_.find({a, b});
  if (it == entries_.end()) return std::nullopt;
  for (const auto& c : it->second.trees)
    if (c.need <= d) return c.q;
  for (const auto& c : it->second.cyclic)
    if (c.need <= d) return c.q;
  return std::nullopt;
}

CenterAuxGraph CenterPairTable::aux_graph(int d) const {
  CenterAuxGraph aux;
  aux.d = d;
  aux.points = all_points(search_->graph());
  aux.adjacency.resize(aux.points.size());
  for (const auto& [key, entry] : entries_) {
    auto w = witness(d, key.first, key.second);
    if (!w) continue;
    int idx = static_cast<int>(aux.edges.size());
    aux.edges.push_back({key.first, key.second, std::move(*w)});
    aux.adjacency[static_cast<std::size_t>(key.first)].emplace_back(key.second, idx);
    aux.adjacency[static_cast<std::size_t>(key.second)].emplace_back(key.first, idx);
  }
  return aux;
}

CenterAuxGraph build_center_aux_graph(const Graph& g, int d, int jobs) {
  GoodTripleSearch search(g);
  return CenterPairTable(search, d, jobs).aux_graph(d);
}

SmallDiameterSolver::SmallDiameterSolver(const GoodTripleSearch& search, int d)
    : search_(&search), g_(&search.graph()), d_(d), points_(all_points(search.graph())),
      eligible_(eligible_points(search.graph(), d)) {}

SmallDiameterSolver::SmallDiameterSolver(const CenterPairTable& table, int d)
    : SmallDiameterSolver(table.search(), d) {
  aux_ = table.aux_graph(d);
  UnionFind uf(static_cast<int>(points_.size()));
  for (const auto& e : aux_->edges) uf.unite(e.a, e.b);
  component_.resize(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) component_[i] = uf.find(static_cast<int>(i));
}

void SmallDiameterSolver::require_instance(const SpanningTree& t_ini, const SpanningTree& t_tar) const {
  if (&t_ini.host() != g_ || &t_tar.host() != g_) throw std::invalid_argument("trees belong to another graph");
  if (tree_diameter(*g_, t_ini.edges()) > d_ || tree_diameter(*g_, t_tar.edges()) > d_)
    throw std::invalid_argument("both trees need diameter at most d");
}

std::optional<EdgeSet> SmallDiameterSolver::edge_witness(int a, int b) const {
  if (a > b) std::swap(a, b);
  if (aux_) {
    for (const auto& [nb, idx] : aux_->adjacency[static_cast<std::size_t>(a)])
      if (nb == b) return aux_->edges[static_cast<std::size_t>(idx)].witness;
    return std::nullopt;
  }
  return search_->find(d_, points_[static_cast<std::size_t>(a)], points_[static_cast<std::size_t>(b)]);
}

bool SmallDiameterSolver::decide(const SpanningTree& t_ini, const SpanningTree& t_tar) const {
  require_instance(t_ini, t_tar);
  if (!aux_) return center_path(t_ini, t_tar).has_value();
  const Graph& g = *g_;
  auto za = center_points(Subgraph(g, t_ini.edges()), d_);
  auto zb = center_points(Subgraph(g, t_tar.edges()), d_);
  for (const auto& a : za)
    for (const auto& b : zb)
      if (component_[static_cast<std::size_t>(point_index(g, a))] ==
          component_[static_cast<std::size_t>(point_index(g, b))])
        return true;
  return false;
}

std::optional<SmallDiameterSolver::CenterPath> SmallDiameterSolver::center_path(const SpanningTree& t_ini,
                                                                                const SpanningTree& t_tar) const {
  require_instance(t_ini, t_tar);
  const Graph& g = *g_;
  auto za = center_points(Subgraph(g, t_ini.edges()), d_);
  auto zb = center_points(Subgraph(g, t_tar.edges()), d_);
  std::size_t np = points_.size();
  std::vector<char> target(np, 0);
  for (const auto& p : zb) target[static_cast<std::size_t>(point_index(g, p))] = 1;
  std::vector<int> prev(np, -2);
  std::vector<EdgeSet> via(np);
  std::queue<int> q;
  for (const auto& p : za) {
    int i = point_index(g, p);
    prev[static_cast<std::size_t>(i)] = -1;
    q.push(i);
  }
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    if (target[static_cast<std::size_t>(x)]) {
      std::vector<int> chain;
      for (int y = x; y != -1; y = prev[static_cast<std::size_t>(y)]) chain.push_back(y);
      std::reverse(chain.begin(), chain.end());
      CenterPath path{points_[static_cast<std::size_t>(chain.front())], {}};
      for (std::size_t i = 1; i < chain.size(); ++i)
        path.hops.push_back({points_[static_cast<std::size_t>(chain[i - 1])], points_[static_cast<std::size_t>(chain[i])],
                             via[static_cast<std::size_t>(chain[i])]});
      return path;
    }
    for (int y = 0; y < static_cast<int>(np); ++y) {
      if (prev[static_cast<std::size_t>(y)] != -2 || !eligible_[static_cast<std::size_t>(y)]) continue;
      if (auto w = edge_witness(x, y)) {
        prev[static_cast<std::size_t>(y)] = x;
        via[static_cast<std::size_t>(y)] = std::move(*w);
        q.push(y);
      }
    }
  }
  return std::nullopt;
}

std::optional<ReconfSequence> SmallDiameterSolver::sequence(const SpanningTree& t_ini,
                                                            const SpanningTree& t_tar) const {
  auto path = center_path(t_ini, t_tar);
  if (!path) return std::nullopt;
  const Graph& g = *g_;
  ReconfSequence seq(Constraint::diam_le(d_), t_ini);
  Point here = path->start;
  for (const auto& hop : path->hops) {
    auto [plus, minus] = split_pseudotree(g, d_, hop.witness, hop.from, hop.to);
    seq.append(same_center_sequence(g, d_, seq.back(), plus, hop.from));
    auto out = edge_set_difference(plus.edges(), minus.edges());
    if (!out.empty()) seq.push(out.front(), edge_set_difference(minus.edges(), plus.edges()).front());
    here = hop.to;
  }
  seq.append(same_center_sequence(g, d_, seq.back(), t_tar, here));
  auto check = validate_sequence(g, seq);
  if (!check.ok) throw std::logic_error("constructed sequence is invalid: " + check.reason);
  return seq;
}

bool decide_small_diameter(const Graph& g, int d, const SpanningTree& t_ini, const SpanningTree& t_tar) {
  if (t_ini == t_tar) {
    if (tree_diameter(g, t_ini.edges()) > d) throw std::invalid_argument("both trees need diameter at most d");
    return true;
  }
  GoodTripleSearch search(g);
  return SmallDiameterSolver(search, d).decide(t_ini, t_tar);
}

std::optional<ReconfSequence> sequence_small_diameter(const Graph& g, int d, const SpanningTree& t_ini,
                                                      const SpanningTree& t_tar) {
  GoodTripleSearch search(g);
  return SmallDiameterSolver(search, d).sequence(t_ini, t_tar);
}

namespace {

// Parent edge of every vertex when t is hung from point r (0 at the root side).
std::vector<EdgeId> hang(const Graph& g, const EdgeSet& t, const Point& r, std::vector<int>* depth = nullptr) {
  int n = g.vertex_count();
  Subgraph sub(g, t);
  std::vector<EdgeId> parent(static_cast<std::size_t>(n), 0);
  std::vector<int> dep(static_cast<std::size_t>(n), -1);
  std::queue<VertexId> q;
  if (r.is_vertex()) {
    dep[static_cast<std::size_t>(r.id)] = 0;
    q.push(r.id);
  } else {
    for (VertexId s : {g.edge(r.id).u, g.edge(r.id).v}) {
      dep[static_cast<std::size_t>(s)] = 0;
      q.push(s);
    }
  }
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (const auto& inc : sub.incident(v)) {
      if (dep[static_cast<std::size_t>(inc.neighbor)] >= 0) continue;
      dep[static_cast<std::size_t>(inc.neighbor)] = dep[static_cast<std::size_t>(v)] + 1;
      parent[static_cast<std::size_t>(inc.neighbor)] = inc.edge;
      q.push(inc.neighbor);
    }
  }
  if (depth) *depth = std::move(dep);
  return parent;
}

}  // namespace

SpanningTree bfs_tree_from(const Graph& g, const Point& r) {
  Subgraph whole(g);
  if (!whole.has_point(r)) throw std::invalid_argument("point " + to_string(r) + " is not in the graph");
  auto parent = hang(g, whole.edges(), r);
  std::vector<EdgeId> edges;
  for (EdgeId pe : parent)
    if (pe) edges.push_back(pe);
  if (r.is_mid()) edges.push_back(r.id);
  return SpanningTree(g, std::move(edges));
}

ReconfSequence same_center_sequence(const Graph& g, int d, const SpanningTree& t1, const SpanningTree& t2,
                                    const Point& r) {
  if (!contains(center_points(Subgraph(g, t1.edges()), d), r) ||
      !contains(center_points(Subgraph(g, t2.edges()), d), r))
    throw std::invalid_argument("point " + to_string(r) + " is not a center of both trees");
  SpanningTree star = bfs_tree_from(g, r);
  std::vector<int> depth;
  auto star_parent = hang(g, star.edges(), r, &depth);

  auto toward = [&](const SpanningTree& start) {
    ReconfSequence seq(Constraint::diam_le(d), start);
    while (!(seq.back() == star)) {
      EdgeId pick = 0;
      int best = 0;
      for (EdgeId e : edge_set_difference(star.edges(), seq.back().edges())) {
        int s = std::min(depth[static_cast<std::size_t>(g.edge(e).u)], depth[static_cast<std::size_t>(g.edge(e).v)]);
        if (pick == 0 || s < best) {
          pick = e;
          best = s;
        }
      }
      const Edge& xy = g.edge(pick);
      VertexId y = star_parent[static_cast<std::size_t>(xy.u)] == pick ? xy.u : xy.v;
      auto cur_parent = hang(g, seq.back().edges(), r);
      seq.push(cur_parent[static_cast<std::size_t>(y)], pick);
    }
    return seq;
  };
  ReconfSequence seq = toward(t1);
  seq.append(toward(t2).reversed());
  return seq;
}

std::pair<SpanningTree, SpanningTree> split_pseudotree(const Graph& g, int d, const EdgeSet& q, const Point& r1,
                                                       const Point& r2) {
  if (!is_pseudotree(g, q)) throw std::invalid_argument("edge set is not a pseudotree");
  Subgraph sub(g, q);
  auto z = center_points(sub, d);
  if (!contains(z, r1) || !contains(z, r2)) throw std::invalid_argument("points are not centers of the pseudotree");
  auto tree_from = [&](const Point& r) {
    LexTree t = lex_point_tree(sub, r);
    return SpanningTree(g, parent_edges(t, g.vertex_count(), g.edge_count()));
  };
  return {tree_from(r1), tree_from(r2)};
}

}  // namespace rst
