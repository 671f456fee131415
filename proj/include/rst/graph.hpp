#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rst {

using VertexId = int;
/// Edge ids are 1-based and follow input order.
using EdgeId = int;
/// Sorted, duplicate-free list of edge ids.
using EdgeSet = std::vector<EdgeId>;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool has(VertexId w) const { return w == u || w == v; }
};

struct Incidence {
  VertexId neighbor = 0;
  EdgeId edge = 0;
};

/// Simple undirected graph. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on loops, parallel edges or out-of-range endpoints.
  Graph(int vertex_count, std::vector<std::pair<VertexId, VertexId>> const& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId id) const { return edges_[static_cast<std::size_t>(id - 1)]; }
  bool valid_edge(EdgeId id) const { return id >= 1 && id <= edge_count(); }
  bool valid_vertex(VertexId v) const { return v >= 0 && v < n_; }

  std::span<const Incidence> incident(VertexId v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(VertexId v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  bool adjacent(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }

  bool is_connected() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// A vertex or the midpoint of an edge. Orders vertices before midpoints.
struct Point {
  enum class Kind : std::uint8_t { Vertex, Mid };
  Kind kind = Kind::Vertex;
  int id = 0;  // vertex id or edge id

  static Point vertex(VertexId v) { return {Kind::Vertex, v}; }
  static Point mid(EdgeId e) { return {Kind::Mid, e}; }
  bool is_vertex() const { return kind == Kind::Vertex; }
  bool is_mid() const { return kind == Kind::Mid; }

  friend auto operator<=>(const Point&, const Point&) = default;
  friend bool operator==(const Point&, const Point&) = default;
};

std::string to_string(const Point& p);
/// Parses "v3" or "e7" (midpoint of edge 7).
Point parse_point(const std::string& text);

/// Points of V ∪ R(G) indexed densely: vertices first, then midpoints by edge id.
inline int point_index(const Graph& g, const Point& p) {
  return p.is_vertex() ? p.id : g.vertex_count() + p.id - 1;
}
inline Point point_at(const Graph& g, int index) {
  return index < g.vertex_count() ? Point::vertex(index) : Point::mid(index - g.vertex_count() + 1);
}
inline int point_count(const Graph& g) { return g.vertex_count() + g.edge_count(); }

/// Normalizes an edge-id list into an EdgeSet (sorted, unique).
EdgeSet make_edge_set(std::vector<EdgeId> ids);
bool edge_set_contains(const EdgeSet& s, EdgeId e);
/// Elements of a that are not in b.
EdgeSet edge_set_difference(const EdgeSet& a, const EdgeSet& b);
EdgeSet edge_set_union(const EdgeSet& a, const EdgeSet& b);
EdgeSet edge_set_intersection(const EdgeSet& a, const EdgeSet& b);

/// Degree of every vertex in the subgraph spanned by `edges`.
std::vector<int> degrees_of(const Graph& g, std::span<const EdgeId> edges);

/// Disjoint-set forest over vertex ids.
class UnionFind {
 public:
  explicit UnionFind(int n);
  int find(int x);
  bool unite(int a, int b);
  bool same(int a, int b) { return find(a) == find(b); }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

}  // namespace rst
