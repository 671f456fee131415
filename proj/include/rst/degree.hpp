#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rst/graph.hpp"
#include "rst/sequence.hpp"

namespace rst {

/// Vertices of degree at least d in t.
std::vector<VertexId> high_degree_set(const SpanningTree& t, int d);

/// Sequence t1 -> t2 keeping deg(u) >= d throughout. Requires u to have degree
/// at least d in both trees; throws std::invalid_argument otherwise.
ReconfSequence shared_hub_sequence(const SpanningTree& t1, const SpanningTree& t2, VertexId u, int d);

/// Closed-form test for an edge uv of the hub graph: some pair of equal or
/// adjacent spanning trees has u of degree >= d in the first and v of degree
/// >= d in the second.
bool degree_aux_edge(const Graph& g, int d, VertexId u, VertexId v);

/// Explicit trees (t, t2), equal or adjacent, with deg_t(u) >= d and
/// deg_t2(v) >= d. nullopt when degree_aux_edge is false or u == v.
std::optional<std::pair<SpanningTree, SpanningTree>> degree_aux_witness(const Graph& g, int d, VertexId u,
                                                                        VertexId v);

struct DegreeAuxGraph {
  int vertex_count = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;  // u < v, lexicographic order
  std::vector<std::vector<VertexId>> adjacency;      // ascending neighbor lists
};

/// All-pairs application of degree_aux_edge. `jobs` > 1 splits rows across threads.
DegreeAuxGraph build_degree_aux_graph(const Graph& g, int d, int jobs = 1);

/// Decision and sequence construction for "max degree at least d", with the
/// hub graph built once and reused across queries.
class LargeDegreeSolver {
 public:
  LargeDegreeSolver(const Graph& g, int d, int jobs = 1);

  const DegreeAuxGraph& aux() const { return aux_; }
  /// Requires both trees to have max degree >= d; throws std::invalid_argument otherwise.
  bool decide(const SpanningTree& t_ini, const SpanningTree& t_tar) const;
  std::optional<ReconfSequence> sequence(const SpanningTree& t_ini, const SpanningTree& t_tar) const;
  /// Shortest hub path from V_d(t_ini) to V_d(t_tar); nullopt if none.
  std::optional<std::vector<VertexId>> hub_path(const SpanningTree& t_ini, const SpanningTree& t_tar) const;

 private:
  void require_instance(const SpanningTree& t_ini, const SpanningTree& t_tar) const;

  const Graph* g_;
  int d_;
  DegreeAuxGraph aux_;
  std::vector<int> component_;
};

bool decide_large_max_degree(const Graph& g, int d, const SpanningTree& t_ini, const SpanningTree& t_tar);
std::optional<ReconfSequence> sequence_large_max_degree(const Graph& g, int d, const SpanningTree& t_ini,
                                                        const SpanningTree& t_tar);

/// Edge xy of t_tar \ t_ini with both endpoints of t_ini-degree <= d-1 (the
/// smallest such id). Throws std::invalid_argument if t_ini == t_tar, t_tar
/// has max degree > d-1, or t_ini has max degree > d.
EdgeId find_swap_edge(const SpanningTree& t_ini, const SpanningTree& t_tar, int d);

/// Shortest sequence under "max degree at most d" when both trees have max
/// degree <= d and at least one has max degree <= d-1. Throws
/// std::invalid_argument when that precondition fails.
ReconfSequence relaxed_small_degree_sequence(const Graph& g, int d, const SpanningTree& t_ini,
                                             const SpanningTree& t_tar);
/// True when relaxed_small_degree_sequence applies.
bool relaxed_precondition(int d, const SpanningTree& t_ini, const SpanningTree& t_tar);

}  // namespace rst
