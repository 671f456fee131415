#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rst/graph.hpp"
#include "rst/sequence.hpp"

namespace rst {

/// Cubic AND/OR constraint graph; parallel edges are allowed, loops are not.
struct NCLGraph {
  enum class Kind { And, Or };
  struct Edge {
    int u = 0;
    int v = 0;
    int weight = 2;  // 1 or 2
  };
  std::vector<Kind> kinds;
  std::vector<Edge> edges;

  int vertex_count() const { return static_cast<int>(kinds.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  /// Incident edge indices of u in increasing order.
  std::vector<int> incident(int u) const;
};

/// Describes the first structural problem (degree, weights, loops), if any.
std::optional<std::string> ncl_structure_error(const NCLGraph& h);

/// head[e] is the endpoint edge e points into.
struct NCLOrientation {
  std::vector<int> head;
  friend bool operator==(const NCLOrientation&, const NCLOrientation&) = default;
};

/// Incoming weight at u.
int ncl_in_weight(const NCLGraph& h, const NCLOrientation& s, int u);
/// Every vertex has incoming weight >= 2 (and the orientation is well formed).
bool validate_ncl(const NCLGraph& h, const NCLOrientation& s);
/// Number of edges oriented differently; throws on size mismatch.
int ncl_distance(const NCLOrientation& a, const NCLOrientation& b);
/// All valid configurations, in binary order over edges (bit set = head is v).
std::vector<NCLOrientation> all_ncl_configurations(const NCLGraph& h);

/// Degree-bounded spanning tree instance built from an NCL graph.
struct NCLInstance {
  NCLGraph h;
  int d = 3;
  std::shared_ptr<const Graph> graph;

  /// Vertex v_{u,e} for edge e at endpoint side s (0: h.edges[e].u, 1: .v).
  std::vector<std::array<VertexId, 2>> incidence_vertex;
  std::vector<VertexId> edge_vertex;                 // v_e
  std::vector<std::array<EdgeId, 2>> edge_gadget;   // v_e v_{side,e}
  std::vector<VertexId> root;                        // r_u
  std::vector<std::array<VertexId, 3>> and_wxy;     // w_u, x_u, y_u (AND only)
  /// OR: r_u v_{u,e_i} for the three incident edges in increasing order.
  /// AND: v_{u,e0} r_u, r_u w_u, w_u x_u, w_u y_u, x_u v_{u,e1}, y_u v_{u,e2}, v_{u,e1} v_{u,e2}.
  std::vector<std::vector<EdgeId>> gadget_edges;
  /// OR: e_1, e_2, e_3. AND: e_0 (weight 2), e_1, e_2.
  std::vector<std::array<int, 3>> gadget_incidences;

  int core_vertex_count = 0;  // |V'|; V' occupies ids 0 .. core_vertex_count-1
  std::vector<int> b;         // over V'
  std::vector<VertexId> leaves;         // L, ascending
  std::vector<VertexId> connector_inner;  // fresh vertices of T*
  EdgeSet connector_edges;                 // E(T*)
  EdgeSet pendant_edges;
  std::vector<std::string> names;  // per vertex of G

  std::optional<SpanningTree> t_ini;
  std::optional<SpanningTree> t_tar;

  /// Side of NCL endpoint u on edge e.
  int side_of(int e, int u) const { return h.edges[static_cast<std::size_t>(e)].u == u ? 0 : 1; }
};

/// Connector tree over the given leaves: a caterpillar of fresh vertices
/// numbered from `first_fresh`. Returns its edges as vertex pairs and the
/// number of fresh vertices used.
struct ConnectorTree {
  std::vector<std::pair<VertexId, VertexId>> edges;
  int fresh = 0;
};
ConnectorTree build_connector_tree(const std::vector<VertexId>& leaves, VertexId first_fresh);

/// Builds G and, when given, the trees of the two configurations. Throws
/// std::invalid_argument on malformed input, d < 3 or invalid configurations.
NCLInstance ncl_to_rst(const NCLGraph& h, int d, const std::optional<NCLOrientation>& s_ini = std::nullopt,
                       const std::optional<NCLOrientation>& s_tar = std::nullopt);

/// First violated structural property of a degree-bounded tree: pendant edges,
/// gadget degree budgets, one edge per edge gadget, connector inclusion.
std::optional<std::string> gadget_property_violation(const NCLInstance& inst, const SpanningTree& t);

/// Reads the configuration encoded by t. Throws std::invalid_argument if t
/// exceeds degree d or breaks a gadget property.
NCLOrientation orientation_of_tree(const NCLInstance& inst, const SpanningTree& t);
/// Canonical tree of a configuration; the OR gadget uses its smallest inward edge.
SpanningTree tree_of_orientation(const NCLInstance& inst, const NCLOrientation& s);

/// Flip sequence between trees whose configurations are equal or adjacent,
/// with every tree of maximum degree at most d. Throws otherwise.
ReconfSequence ncl_step_sequence(const NCLInstance& inst, const SpanningTree& t1, const SpanningTree& t2);

}  // namespace rst
