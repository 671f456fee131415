#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rst/distances.hpp"
#include "rst/graph.hpp"
#include "rst/lexlen.hpp"
#include "rst/sequence.hpp"

namespace rst {

/// λ(v) = max of the perturbed distances from r1 and r2 to v inside q.
using LambdaLabels = std::vector<LexLen>;

/// Throws std::invalid_argument if r1 or r2 is not on q.
LambdaLabels lambda_labels(const Graph& g, const EdgeSet& q, const Point& r1, const Point& r2);

/// Smallest d for which (r1, r2, q) is a good triple with r1, r2 ∈ Z(q), i.e.
/// max(ecc(r1), ecc(r2)) in half units; nullopt if q is not a pseudotree,
/// r1 == r2, a point is off q, or a goodness condition fails.
std::optional<int> good_triple_need(const Graph& g, const EdgeSet& q, const Point& r1, const Point& r2);
bool is_good_triple(const Graph& g, int d, const Point& r1, const Point& r2, const EdgeSet& q);

struct GoodTriple {
  Point r1;
  Point r2;
  EdgeSet q;
  LambdaLabels labels;
};

/// Per-graph search for good triples. Shortest-path data of the host graph
/// is computed once; each query is independent and const.
class GoodTripleSearch {
 public:
  explicit GoodTripleSearch(const Graph& g);

  struct Candidate {
    EdgeSet q;
    int need;  // smallest d accepting q
    bool cyclic;
  };
  struct Stats {
    std::int64_t guesses = 0;
    std::int64_t shortest_path_runs = 0;
    std::int64_t ties = 0;
  };

  const Graph& graph() const { return *g_; }

  /// Tree-shaped witness guessed from the edge carrying the r1-r2 midpoint.
  std::optional<EdgeSet> find_good_tree(int d, const Point& r1, const Point& r2, Stats* stats = nullptr) const;
  /// Witness with a cycle through r1 and r2, guessed from its two switching edges.
  std::optional<EdgeSet> find_good_cyclic_pseudotree(int d, const Point& r1, const Point& r2,
                                                     Stats* stats = nullptr) const;
  /// First witness of either kind (trees first); nullopt if r1 == r2.
  std::optional<EdgeSet> find(int d, const Point& r1, const Point& r2, Stats* stats = nullptr) const;

  /// Every good candidate both searches produce, in search order, without a
  /// bound on d. find(d, ...) equals the first entry with need <= d among
  /// trees, then among cyclic ones.
  std::vector<Candidate> candidates(const Point& r1, const Point& r2, Stats* stats = nullptr) const;

  /// Shortest x-y path of the host (unique under the perturbed lengths).
  const std::vector<VertexId>& shortest_path_vertices(VertexId x, VertexId y) const;

 private:
  struct Walk {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
    std::vector<std::uint64_t> vmask;
    std::vector<std::uint64_t> emask;
    EdgeId f = 0;  // real edge guessed inside the walk, 0 for the plain shortest path
  };
  /// Receives each good candidate and its need; returns true to stop.
  using Visitor = std::function<bool(const EdgeSet&, int)>;

  const LexLen& dist(const Point& p, VertexId v) const;
  void search_trees(const Point& r1, const Point& r2, Stats* stats, const Visitor& visit) const;
  void search_cyclic(const Point& r1, const Point& r2, Stats* stats, const Visitor& visit) const;
  const std::vector<Walk>& walks(VertexId a, VertexId b) const {
    return walks_[static_cast<std::size_t>(a) * static_cast<std::size_t>(g_->vertex_count()) +
                  static_cast<std::size_t>(b)];
  }

  const Graph* g_;
  std::size_t words_v_;
  std::size_t words_e_;
  std::vector<std::vector<LexLen>> point_dist_;  // [point index][vertex]
  std::vector<std::vector<VertexId>> sp_vertices_;
  std::vector<std::vector<EdgeId>> sp_edges_;
  std::vector<std::vector<Walk>> walks_;
};

std::optional<EdgeSet> find_good_tree(const Graph& g, int d, const Point& r1, const Point& r2);
std::optional<EdgeSet> find_good_cyclic_pseudotree(const Graph& g, int d, const Point& r1, const Point& r2);

/// All vertices and edge midpoints, vertices first, ids ascending.
std::vector<Point> all_points(const Graph& g);

/// Edges r1r2 of the center graph with their witness pseudotrees.
struct CenterAuxGraph {
  int d = 0;
  std::vector<Point> points;  // all_points(g)
  struct Edge {
    int a;  // indices into points, a < b
    int b;
    EdgeSet witness;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<std::pair<int, int>>> adjacency;  // (neighbor, edge index)
};

/// Witness thresholds for every point pair, independent of d.
class CenterPairTable {
 public:
  /// Computes candidates(r1, r2) for all pairs of points whose eccentricity in
  /// g is at most `max_d` half units; `jobs` threads split the pairs.
  CenterPairTable(const GoodTripleSearch& search, int max_d, int jobs = 1);

  int max_d() const { return max_d_; }
  const GoodTripleSearch& search() const { return *search_; }
  /// Witness used at bound d (first tree candidate with need <= d, else first cyclic one).
  std::optional<EdgeSet> witness(int d, int a, int b) const;
  CenterAuxGraph aux_graph(int d) const;

 private:
  struct Entry {
    std::vector<GoodTripleSearch::Candidate> trees;
    std::vector<GoodTripleSearch::Candidate> cyclic;
  };
  const GoodTripleSearch* search_;
  int max_d_;
  std::map<std::pair<int, int>, Entry> entries_;
};

CenterAuxGraph build_center_aux_graph(const Graph& g, int d, int jobs = 1);

/// Decision and sequence construction for "diameter at most d".
class SmallDiameterSolver {
 public:
  /// Lazy mode: pairs are tested on demand, exploring from the start centers.
  SmallDiameterSolver(const GoodTripleSearch& search, int d);
  /// Table mode: the center graph at d is read off a precomputed table.
  SmallDiameterSolver(const CenterPairTable& table, int d);

  /// Both trees need diameter <= d; throws std::invalid_argument otherwise.
  bool decide(const SpanningTree& t_ini, const SpanningTree& t_tar) const;
  std::optional<ReconfSequence> sequence(const SpanningTree& t_ini, const SpanningTree& t_tar) const;

  struct Hop {
    Point from;
    Point to;
    EdgeSet witness;
  };
  /// Shortest center-graph path from Z(t_ini) to Z(t_tar); empty hop list when
  /// the center sets intersect (`start` then holds a shared center).
  struct CenterPath {
    Point start;
    std::vector<Hop> hops;
  };
  std::optional<CenterPath> center_path(const SpanningTree& t_ini, const SpanningTree& t_tar) const;

 private:
  std::optional<EdgeSet> edge_witness(int a, int b) const;
  void require_instance(const SpanningTree& t_ini, const SpanningTree& t_tar) const;

  const GoodTripleSearch* search_;
  const Graph* g_;
  int d_;
  std::vector<Point> points_;
  std::vector<char> eligible_;  // eccentricity in g at most d
  std::optional<CenterAuxGraph> aux_;  // table mode only
  std::vector<int> component_;        // table mode only
};

bool decide_small_diameter(const Graph& g, int d, const SpanningTree& t_ini, const SpanningTree& t_tar);
std::optional<ReconfSequence> sequence_small_diameter(const Graph& g, int d, const SpanningTree& t_ini,
                                                      const SpanningTree& t_tar);

/// Breadth-first tree from r in g (a midpoint r keeps its own edge).
SpanningTree bfs_tree_from(const Graph& g, const Point& r);
/// t1 -> t2 through the breadth-first tree from a shared center r; every tree
/// keeps r as a center. Throws std::invalid_argument unless r ∈ Z(t1) ∩ Z(t2).
ReconfSequence same_center_sequence(const Graph& g, int d, const SpanningTree& t1, const SpanningTree& t2,
                                    const Point& r);
/// Shortest-path trees of q from r1 and r2. Throws unless r1, r2 ∈ Z(q).
std::pair<SpanningTree, SpanningTree> split_pseudotree(const Graph& g, int d, const EdgeSet& q, const Point& r1,
                                                       const Point& r2);

}  // namespace rst
