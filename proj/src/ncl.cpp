#include "rst/ncl.hpp"

#include <algorithm>
#include <stdexcept>

namespace rst {

std::vector<int> NCLGraph::incident(int u) const {
  std::vector<int> out;
  for (int e = 0; e < edge_count(); ++e)
    if (edges[static_cast<std::size_t>(e)].u == u || edges[static_cast<std::size_t>(e)].v == u) out.push_back(e);
  return out;
}

std::optional<std::string> ncl_structure_error(const NCLGraph& h) {
  int n = h.vertex_count();
  if (n == 0) return "graph has no vertices";
  for (int e = 0; e < h.edge_count(); ++e) {
    const auto& ed = h.edges[static_cast<std::size_t>(e)];
    if (ed.u < 0 || ed.u >= n || ed.v < 0 || ed.v >= n) return "edge " + std::to_string(e) + " has an unknown endpoint";
    if (ed.u == ed.v) return "edge " + std::to_string(e) + " is a loop";
    if (ed.weight != 1 && ed.weight != 2) return "edge " + std::to_string(e) + " has weight other than 1 or 2";
  }
  for (int u = 0; u < n; ++u) {
    auto inc = h.incident(u);
    if (inc.size() != 3) return "vertex " + std::to_string(u) + " does not have degree 3";
    int twos = 0;
    for (int e : inc) twos += h.edges[static_cast<std::size_t>(e)].weight == 2;
    if (h.kinds[static_cast<std::size_t>(u)] == NCLGraph::Kind::Or && twos != 3)
      return "OR vertex " + std::to_string(u) + " needs three weight-2 edges";
    if (h.kinds[static_cast<std::size_t>(u)] == NCLGraph::Kind::And && twos != 1)
      return "AND vertex " + std::to_string(u) + " needs one weight-2 and two weight-1 edges";
  }
  return std::nullopt;
}

int ncl_in_weight(const NCLGraph& h, const NCLOrientation& s, int u) {
  int w = 0;
  for (int e = 0; e < h.edge_count(); ++e)
    if (s.head[static_cast<std::size_t>(e)] == u) w += h.edges[static_cast<std::size_t>(e)].weight;
  return w;
}

bool validate_ncl(const NCLGraph& h, const NCLOrientation& s) {
  if (static_cast<int>(s.head.size()) != h.edge_count()) return false;
  for (int e = 0; e < h.edge_count(); ++e) {
    const auto& ed = h.edges[static_cast<std::size_t>(e)];
    int hd = s.head[static_cast<std::size_t>(e)];
    if (hd != ed.u && hd != ed.v) return false;
  }
  for (int u = 0; u < h.vertex_count(); ++u)
    if (ncl_in_weight(h, s, u) < 2) return false;
  return true;
}

int ncl_distance(const NCLOrientation& a, const NCLOrientation& b) {
  if (a.head.size() != b.head.size()) throw std::invalid_argument("orientations have different sizes");
  int out = 0;
  for (std::size_t e = 0; e < a.head.size(); ++e) out += a.head[e] != b.head[e];
  return out;
}

std::vector<NCLOrientation> all_ncl_configurations(const NCLGraph& h) {
  int m = h.edge_count();
  if (m > 24) throw std::invalid_argument("too many edges to enumerate configurations");
  std::vector<NCLOrientation> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    NCLOrientation s;
    for (int e = 0; e < m; ++e) {
      const auto& ed = h.edges[static_cast<std::size_t>(e)];
      s.head.push_back((mask >> e) & 1U ? ed.v : ed.u);
    }
    if (validate_ncl(h, s)) out.push_back(std::move(s));
  }
  return out;
}

ConnectorTree build_connector_tree(const std::vector<VertexId>& leaves, VertexId first_fresh) {
  ConnectorTree out;
  std::size_t k = leaves.size();
  if (k < 2) throw std::invalid_argument("connector needs at least two leaves");
  if (k <= 3) {
    out.fresh = 1;
    for (VertexId l : leaves) out.edges.emplace_back(first_fresh, l);
    return out;
  }
  // Spine c_0 .. c_{k-3}; the ends take two leaves, inner spine vertices one.
  int spine = static_cast<int>(k) - 2;
  out.fresh = spine;
  for (int i = 0; i + 1 < spine; ++i) out.edges.emplace_back(first_fresh + i, first_fresh + i + 1);
  out.edges.emplace_back(first_fresh, leaves[0]);
  for (int i = 0; i < spine; ++i) out.edges.emplace_back(first_fresh + i, leaves[static_cast<std::size_t>(i) + 1]);
  out.edges.emplace_back(first_fresh + spine - 1, leaves[k - 1]);
  return out;
}

NCLInstance ncl_to_rst(const NCLGraph& h, int d, const std::optional<NCLOrientation>& s_ini,
                       const std::optional<NCLOrientation>& s_tar) {
  if (auto err = ncl_structure_error(h)) throw std::invalid_argument(*err);
  if (d < 3) throw std::invalid_argument("degree bound must be at least 3");
  NCLInstance inst;
  inst.h = h;
  inst.d = d;
  int nh = h.vertex_count();
  int mh = h.edge_count();

  VertexId next = 0;
  auto fresh = [&](std::string name, int b) {
    inst.names.push_back(std::move(name));
    inst.b.push_back(b);
    return next++;
  };
  inst.incidence_vertex.resize(static_cast<std::size_t>(mh));
  inst.edge_vertex.resize(static_cast<std::size_t>(mh));
  for (int e = 0; e < mh; ++e) {
    const auto& ed = h.edges[static_cast<std::size_t>(e)];
    auto es = std::to_string(e);
    inst.incidence_vertex[static_cast<std::size_t>(e)][0] = fresh("v[" + std::to_string(ed.u) + "," + es + "]", 2);
    inst.incidence_vertex[static_cast<std::size_t>(e)][1] = fresh("v[" + std::to_string(ed.v) + "," + es + "]", 2);
    inst.edge_vertex[static_cast<std::size_t>(e)] = fresh("v[" + es + "]", 1);
  }
  inst.root.resize(static_cast<std::size_t>(nh));
  inst.and_wxy.resize(static_cast<std::size_t>(nh), {-1, -1, -1});
  for (int u = 0; u < nh; ++u) {
    auto us = std::to_string(u);
    inst.root[static_cast<std::size_t>(u)] = fresh("r[" + us + "]", 1);
    if (h.kinds[static_cast<std::size_t>(u)] == NCLGraph::Kind::And) {
      VertexId w = fresh("w[" + us + "]", 3);
      VertexId x = fresh("x[" + us + "]", 2);
      VertexId y = fresh("y[" + us + "]", 2);
      inst.and_wxy[static_cast<std::size_t>(u)] = {w, x, y};
    }
  }
  inst.core_vertex_count = next;

  std::vector<std::pair<VertexId, VertexId>> pairs;
  auto add = [&](VertexId a, VertexId c) {
    pairs.emplace_back(a, c);
    return static_cast<EdgeId>(pairs.size());
  };
  auto inc = [&](int u, int e) { return inst.incidence_vertex[static_cast<std::size_t>(e)][static_cast<std::size_t>(inst.side_of(e, u))]; };

  inst.edge_gadget.resize(static_cast<std::size_t>(mh));
  for (int e = 0; e < mh; ++e) {
    VertexId ve = inst.edge_vertex[static_cast<std::size_t>(e)];
    inst.edge_gadget[static_cast<std::size_t>(e)][0] = add(ve, inst.incidence_vertex[static_cast<std::size_t>(e)][0]);
    inst.edge_gadget[static_cast<std::size_t>(e)][1] = add(ve, inst.incidence_vertex[static_cast<std::size_t>(e)][1]);
  }
  inst.gadget_edges.resize(static_cast<std::size_t>(nh));
  inst.gadget_incidences.resize(static_cast<std::size_t>(nh));
  for (int u = 0; u < nh; ++u) {
    auto incident = h.incident(u);
    VertexId r = inst.root[static_cast<std::size_t>(u)];
    auto& ge = inst.gadget_edges[static_cast<std::size_t>(u)];
    auto& gi = inst.gadget_incidences[static_cast<std::size_t>(u)];
    if (h.kinds[static_cast<std::size_t>(u)] == NCLGraph::Kind::Or) {
      for (std::size_t i = 0; i < 3; ++i) {
        gi[i] = incident[i];
        ge.push_back(add(r, inc(u, incident[i])));
        inst.leaves.push_back(inc(u, incident[i]));
      }
    } else {
      std::vector<int> light;
      for (int e : incident) {
        if (h.edges[static_cast<std::size_t>(e)].weight == 2)
          gi[0] = e;
        else
          light.push_back(e);
      }
      gi[1] = light[0];
      gi[2] = light[1];
      auto [w, x, y] = inst.and_wxy[static_cast<std::size_t>(u)];
      VertexId v0 = inc(u, gi[0]);
      VertexId v1 = inc(u, gi[1]);
      VertexId v2 = inc(u, gi[2]);
      ge = {add(v0, r), add(r, w), add(w, x), add(w, y), add(x, v1), add(y, v2), add(v1, v2)};
      inst.leaves.push_back(v0);
      inst.leaves.push_back(w);
    }
  }
  std::sort(inst.leaves.begin(), inst.leaves.end());

  ConnectorTree star = build_connector_tree(inst.leaves, next);
  for (int i = 0; i < star.fresh; ++i) {
    inst.connector_inner.push_back(next++);
    inst.names.push_back("c[" + std::to_string(i) + "]");
  }
  std::vector<EdgeId> connector;
  for (auto [a, c] : star.edges) connector.push_back(add(a, c));
  inst.connector_edges = make_edge_set(std::move(connector));

  std::vector<EdgeId> pendants;
  for (VertexId v = 0; v < inst.core_vertex_count; ++v) {
    for (int i = 1; i <= d - inst.b[static_cast<std::size_t>(v)]; ++i) {
      inst.names.push_back(inst.names[static_cast<std::size_t>(v)] + "'" + std::to_string(i));
      pendants.push_back(add(v, next++));
    }
  }
  inst.pendant_edges = make_edge_set(std::move(pendants));
  inst.graph = std::make_shared<const Graph>(next, pairs);

  if (s_ini) inst.t_ini = tree_of_orientation(inst, *s_ini);
  if (s_tar) inst.t_tar = tree_of_orientation(inst, *s_tar);
  return inst;
}

std::optional<std::string> gadget_property_violation(const NCLInstance& inst, const SpanningTree& t) {
  const Graph& g = *inst.graph;
  if (&t.host() != &g) return "tree belongs to another graph";
  if (t.max_degree() > inst.d) return "maximum degree exceeds " + std::to_string(inst.d);
  for (EdgeId e : inst.pendant_edges)
    if (!t.contains(e)) return "pendant edge " + std::to_string(e) + " is missing";
  std::vector<int> budget(static_cast<std::size_t>(inst.core_vertex_count), 0);
  for (EdgeId e : t.edges()) {
    if (edge_set_contains(inst.pendant_edges, e)) continue;
    for (VertexId w : {g.edge(e).u, g.edge(e).v})
      if (w < inst.core_vertex_count) ++budget[static_cast<std::size_t>(w)];
  }
  for (VertexId v = 0; v < inst.core_vertex_count; ++v)
    if (budget[static_cast<std::size_t>(v)] > inst.b[static_cast<std::size_t>(v)])
      return "vertex " + inst.names[static_cast<std::size_t>(v)] + " exceeds its gadget degree";
  for (int e = 0; e < inst.h.edge_count(); ++e) {
    const auto& pair = inst.edge_gadget[static_cast<std::size_t>(e)];
    if (t.contains(pair[0]) == t.contains(pair[1]))
      return "edge gadget " + std::to_string(e) + " does not hold exactly one edge";
  }
  for (EdgeId e : inst.connector_edges)
    if (!t.contains(e)) return "connector edge " + std::to_string(e) + " is missing";
  return std::nullopt;
}

NCLOrientation orientation_of_tree(const NCLInstance& inst, const SpanningTree& t) {
  if (auto err = gadget_property_violation(inst, t)) throw std::invalid_argument(*err);
  NCLOrientation s;
  for (int e = 0; e < inst.h.edge_count(); ++e) {
    const auto& ed = inst.h.edges[static_cast<std::size_t>(e)];
    // Holding the gadget edge at one side points the NCL edge at the other.
    s.head.push_back(t.contains(inst.edge_gadget[static_cast<std::size_t>(e)][0]) ? ed.v : ed.u);
  }
  return s;
}

SpanningTree tree_of_orientation(const NCLInstance& inst, const NCLOrientation& s) {
  if (!validate_ncl(inst.h, s)) throw std::invalid_argument("orientation is not a valid configuration");
  std::vector<EdgeId> edges(inst.connector_edges.begin(), inst.connector_edges.end());
  edges.insert(edges.end(), inst.pendant_edges.begin(), inst.pendant_edges.end());
  for (int e = 0; e < inst.h.edge_count(); ++e) {
    int tail_side = 1 - inst.side_of(e, s.head[static_cast<std::size_t>(e)]);
    edges.push_back(inst.edge_gadget[static_cast<std::size_t>(e)][static_cast<std::size_t>(tail_side)]);
  }
  for (int u = 0; u < inst.h.vertex_count(); ++u) {
    const auto& ge = inst.gadget_edges[static_cast<std::size_t>(u)];
    const auto& gi = inst.gadget_incidences[static_cast<std::size_t>(u)];
    if (inst.h.kinds[static_cast<std::size_t>(u)] == NCLGraph::Kind::Or) {
      for (std::size_t i = 0; i < 3; ++i) {
        if (s.head[static_cast<std::size_t>(gi[i])] == u) {
          edges.push_back(ge[i]);
          break;
        }
      }
    } else {
      bool heavy_in = s.head[static_cast<std::size_t>(gi[0])] == u;
      for (std::size_t i = 0; i < ge.size(); ++i) {
        bool skip = heavy_in ? (i == 1 || i == 6) : (i == 0 || i == 3);
        if (!skip) edges.push_back(ge[i]);
      }
    }
  }
  auto t = SpanningTree::make(*inst.graph, std::move(edges));
  if (!t || t->max_degree() > inst.d) throw std::logic_error("configuration tree is malformed");
  return *t;
}

ReconfSequence ncl_step_sequence(const NCLInstance& inst, const SpanningTree& t1, const SpanningTree& t2) {
  const NCLGraph& h = inst.h;
  NCLOrientation s1 = orientation_of_tree(inst, t1);
  NCLOrientation s2 = orientation_of_tree(inst, t2);
  int diff_count = ncl_distance(s1, s2);
  if (diff_count > 1) throw std::invalid_argument("configurations are neither equal nor adjacent");
  int flipped = -1;
  for (int e = 0; e < h.edge_count(); ++e)
    if (s1.head[static_cast<std::size_t>(e)] != s2.head[static_cast<std::size_t>(e)]) flipped = e;

  Constraint c = Constraint::max_deg_le(inst.d);
  ReconfSequence fwd(c, t1);
  ReconfSequence bwd(c, t2);
  // The side allowed to move at gadget u: t1 unless the flipped edge touches
  // u and points into u only in t2's configuration.
  auto first_side = [&](int u) {
    if (flipped < 0) return true;
    const auto& ed = h.edges[static_cast<std::size_t>(flipped)];
    if (ed.u != u && ed.v != u) return true;
    return s1.head[static_cast<std::size_t>(flipped)] == u;
  };
  auto step = [&](bool from_first, const std::vector<EdgeId>& part) {
    ReconfSequence& mover = from_first ? fwd : bwd;
    const SpanningTree& other = from_first ? bwd.back() : fwd.back();
    EdgeSet local = make_edge_set(part);
    auto out = edge_set_difference(edge_set_intersection(mover.back().edges(), local), other.edges());
    auto in = edge_set_difference(edge_set_intersection(other.edges(), local), mover.back().edges());
    if (out.size() != 1 || in.size() != 1) throw std::logic_error("gadget differs by more than one exchange");
    mover.push(out.front(), in.front());
  };

  for (std::size_t guard = 0;; ++guard) {
    if (guard > static_cast<std::size_t>(inst.graph->edge_count())) throw std::logic_error("gadget exchange did not converge");
    auto diff = edge_set_difference(fwd.back().edges(), bwd.back().edges());
    if (diff.empty()) break;
    if (diff.size() == 1) {
      fwd.push(diff.front(), edge_set_difference(bwd.back().edges(), fwd.back().edges()).front());
      break;
    }
    bool moved = false;
    for (int u = 0; u < h.vertex_count() && !moved; ++u) {
      const auto& ge = inst.gadget_edges[static_cast<std::size_t>(u)];
      std::size_t hits = 0;
      for (EdgeId e : ge) hits += edge_set_contains(diff, e);
      if (hits == 0) continue;
      moved = true;
      if (h.kinds[static_cast<std::size_t>(u)] == NCLGraph::Kind::Or || hits == 1) {
        step(first_side(u), ge);
        continue;
      }
      // Both the root edge and one cycle edge differ.
      bool first_has_heavy = fwd.back().contains(ge[0]);
      const NCLOrientation& s_light = first_has_heavy ? s2 : s1;  // side using r_u w_u
      int e0 = inst.gadget_incidences[static_cast<std::size_t>(u)][0];
      if (s_light.head[static_cast<std::size_t>(e0)] == u) {
        step(!first_has_heavy, {ge[0], ge[1]});
      } else {
        step(first_has_heavy, {ge.begin() + 2, ge.end()});
      }
    }
    if (!moved) throw std::logic_error("trees differ outside the vertex gadgets");
  }
  fwd.append(bwd.reversed());
  auto check = validate_sequence(*inst.graph, fwd);
  if (!check.ok) throw std::logic_error("gadget sequence is invalid: " + check.reason);
  return fwd;
}

}  // namespace rst
