#pragma once

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "rst/graph.hpp"
#include "rst/lexlen.hpp"

namespace rst {

/// Distance on the edge-subdivided graph, i.e. twice the true distance.
using HalfDist = int;
inline constexpr HalfDist kUnreachable = std::numeric_limits<int>::max();

/// Spanning subgraph of a host graph given by an edge set. Keeps the host's
/// vertex set and edge ids.
class Subgraph {
 public:
  /// The whole graph.
  explicit Subgraph(const Graph& g);
  Subgraph(const Graph& g, EdgeSet edges);

  const Graph& host() const { return *g_; }
  const EdgeSet& edges() const { return edges_; }
  bool contains(EdgeId e) const { return in_[static_cast<std::size_t>(e)] != 0; }
  std::span<const Incidence> incident(VertexId v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  /// True if p is a vertex, or the midpoint of an edge of this subgraph.
  bool has_point(const Point& p) const;
  bool is_connected() const;

 private:
  const Graph* g_;
  EdgeSet edges_;
  std::vector<char> in_;
  std::vector<std::vector<Incidence>> adj_;
};

/// Half-unit distances from p to every point of the host, indexed by
/// point_index. Points not on h (midpoints of absent edges, unreachable
/// vertices) get kUnreachable. Throws std::invalid_argument if p is not on h.
std::vector<HalfDist> point_distances_half(const Subgraph& h, const Point& p);
/// Half-unit distances between all vertex pairs, row-major n x n.
std::vector<HalfDist> all_pairs_half(const Subgraph& h);
/// Maximum half-unit distance from p to a vertex of h.
HalfDist eccentricity_half(const Subgraph& h, const Point& p);
HalfDist diameter_half(const Subgraph& h);
/// Points r of V ∪ R(q) with eccentricity_half(q, r) <= d, in point order.
std::vector<Point> center_points(const Subgraph& q, int d);

struct Cycle {
  std::vector<VertexId> vertices;  // cyclic order, vertices[i] -- vertices[i+1]
  std::vector<EdgeId> edges;       // edges[i] joins vertices[i] and vertices[i+1 mod k]
};
/// The unique cycle of a pseudotree (or any subgraph whose cycle space has
/// dimension at most one); nullopt if acyclic.
std::optional<Cycle> unique_cycle(const Subgraph& q);

/// Edges of the unique path between a and b in a forest, ordered from a.
/// Empty when a == b or when they are disconnected.
std::vector<EdgeId> forest_path(const Subgraph& forest, VertexId a, VertexId b);

/// Weighted graph used by lexicographic Dijkstra. Edge ids are arbitrary
/// positive integers; they only serve as tie-break keys and parent labels.
struct LexGraph {
  struct Arc {
    VertexId to;
    int edge;
    LexLen weight;
  };
  explicit LexGraph(int n) : adj(static_cast<std::size_t>(n)) {}
  void add_edge(int id, VertexId a, VertexId b, const LexLen& w);
  int vertex_count() const { return static_cast<int>(adj.size()); }

  std::vector<std::vector<Arc>> adj;
};

/// Builds the LexGraph of a subgraph with weights ℓ(e) = (1, unit(e)).
LexGraph perturbed_graph(const Subgraph& h);

struct LexSeed {
  VertexId vertex;
  LexLen dist;
  int via = 0;  // edge used to reach the seed, 0 for none
};

struct LexTree {
  std::vector<std::optional<LexLen>> dist;
  std::vector<int> parent_edge;  // 0 for seeds and unreachable vertices
  /// Set when two relaxations produced equal lengths for some vertex.
  bool tie_seen = false;
};

/// Lexicographic Dijkstra. Equal lengths prefer the smaller incoming edge id.
LexTree lex_shortest_tree(const LexGraph& g, std::span<const LexSeed> seeds);
/// Seeds for a search starting at point p (a midpoint seeds both endpoints).
std::vector<LexSeed> point_seeds(const Graph& g, const Point& p);
/// Perturbed distances from p to every vertex of h.
LexTree lex_point_tree(const Subgraph& h, const Point& p);
/// Perturbed distance between two points of h; nullopt when disconnected.
std::optional<LexLen> lex_point_distance(const Subgraph& h, const Point& p, const Point& q);
/// Distance to point q given a tree of vertex distances from some source.
std::optional<LexLen> lex_distance_to(const Graph& g, const LexTree& from, const Point& source,
                                      const Point& q);

}  // namespace rst
