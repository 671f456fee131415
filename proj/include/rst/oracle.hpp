#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "rst/graph.hpp"
#include "rst/sequence.hpp"

namespace rst {

inline constexpr std::size_t kDefaultTreeCap = 2'000'000;

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Calls `visit` once per spanning tree of g (deletion/contraction order).
/// Trees whose degree would exceed `max_degree` are pruned when it is set.
/// Throws CapExceeded once more than `cap` trees were produced.
void for_each_spanning_tree(const Graph& g, const std::function<void(const EdgeSet&)>& visit,
                            std::size_t cap = kDefaultTreeCap, std::optional<int> max_degree = std::nullopt);
std::vector<EdgeSet> enumerate_spanning_trees(const Graph& g, std::size_t cap = kDefaultTreeCap);

struct EdgeSetHash {
  std::size_t operator()(const EdgeSet& s) const noexcept;
};

/// Flip graph restricted to the trees satisfying a constraint.
class FlipGraph {
 public:
  FlipGraph(const Graph& g, Constraint c, std::size_t cap = kDefaultTreeCap);

  const Graph& graph() const { return *g_; }
  const Constraint& constraint() const { return c_; }
  std::size_t size() const { return trees_.size(); }
  const EdgeSet& tree(std::size_t i) const { return trees_[i]; }
  std::optional<std::size_t> index_of(const EdgeSet& t) const;
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adj_[i]; }
  std::size_t component(std::size_t i) const { return comp_[i]; }
  /// Shortest path of tree indices; nullopt when unreachable.
  std::optional<std::vector<std::size_t>> shortest_path(std::size_t from, std::size_t to) const;

 private:
  const Graph* g_;
  Constraint c_;
  std::vector<EdgeSet> trees_;
  std::unordered_map<EdgeSet, std::size_t, EdgeSetHash> index_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> comp_;
};

/// Trees obtained from t by a single flip, in (added, removed) id order.
std::vector<std::pair<FlipStep, EdgeSet>> flip_neighbors(const Graph& g, const EdgeSet& t);

struct OracleAnswer {
  bool reachable = false;
  std::optional<ReconfSequence> sequence;  // shortest, when reachable
};

/// Breadth-first search over the constrained flip graph. Throws
/// std::invalid_argument if a tree violates c, CapExceeded on large inputs.
OracleAnswer oracle_decide(const Graph& g, Constraint c, const SpanningTree& t_ini, const SpanningTree& t_tar,
                           std::size_t cap = kDefaultTreeCap);

/// All spanning subgraphs with n-1 or n edges that are pseudotrees.
std::vector<EdgeSet> enumerate_pseudotrees(const Graph& g);

/// Some pseudotree Q has r1 and r2 among its center points (r1 != r2).
bool oracle_center_pair(const Graph& g, int d, const Point& r1, const Point& r2);

/// Exhaustive search for a good triple (r1, r2, Q); returns the first Q in
/// enumeration order. Path lengths are computed by enumerating simple paths.
std::optional<EdgeSet> oracle_good_triple(const Graph& g, int d, const Point& r1, const Point& r2);

/// Smallest half-unit bound d for which (r1, r2, Q) is good with r1, r2 in Z(Q);
/// nullopt if Q fails the goodness conditions regardless of d.
std::optional<int> oracle_good_triple_need(const Graph& g, const EdgeSet& q, const Point& r1, const Point& r2);

/// Some equal or adjacent spanning trees T, T' have deg_T(u) >= d and deg_T'(v) >= d.
bool oracle_degree_pair(const Graph& g, int d, VertexId u, VertexId v, std::size_t cap = kDefaultTreeCap);
/// The same relation for all ordered pairs at once, row-major n x n.
std::vector<char> oracle_degree_pairs(const Graph& g, int d, std::size_t cap = kDefaultTreeCap);

/// Hamiltonian s-t path by backtracking, as a vertex list.
std::optional<std::vector<VertexId>> oracle_hampath(const Graph& g, VertexId s, VertexId t);

}  // namespace rst
