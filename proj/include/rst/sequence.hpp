#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rst/graph.hpp"

namespace rst {

/// Spanning tree of a host graph, stored as a sorted edge-id set.
class SpanningTree {
 public:
  /// Throws std::invalid_argument unless `edges` spans g as a tree.
  SpanningTree(const Graph& g, std::vector<EdgeId> edges);

  static std::optional<SpanningTree> make(const Graph& g, std::vector<EdgeId> edges);

  const Graph& host() const { return *g_; }
  const EdgeSet& edges() const { return edges_; }
  bool contains(EdgeId e) const { return edge_set_contains(edges_, e); }
  std::vector<int> degrees() const { return degrees_of(*g_, edges_); }
  int max_degree() const;

  friend bool operator==(const SpanningTree& a, const SpanningTree& b) {
    return a.g_ == b.g_ && a.edges_ == b.edges_;
  }

 private:
  struct Trusted {};
  SpanningTree(Trusted, const Graph& g, EdgeSet edges) : g_(&g), edges_(std::move(edges)) {}

  const Graph* g_;
  EdgeSet edges_;
};

/// Connected spanning subgraph with n-1 or n edges (at most one cycle).
class Pseudotree {
 public:
  /// Throws std::invalid_argument if `edges` is not a pseudotree of g.
  Pseudotree(const Graph& g, std::vector<EdgeId> edges);
  static std::optional<Pseudotree> make(const Graph& g, std::vector<EdgeId> edges);

  const Graph& host() const { return *g_; }
  const EdgeSet& edges() const { return edges_; }
  bool has_cycle() const { return static_cast<int>(edges_.size()) == g_->vertex_count(); }

 private:
  const Graph* g_;
  EdgeSet edges_;
};

bool validate_spanning_tree(const Graph& g, const std::vector<EdgeId>& edges);
bool is_pseudotree(const Graph& g, const std::vector<EdgeId>& edges);

/// True iff |E(t1) \ E(t2)| <= 1. Throws std::invalid_argument on host mismatch.
bool are_flip_adjacent(const SpanningTree& t1, const SpanningTree& t2);
/// Throws std::invalid_argument if the flip is malformed or breaks the tree.
SpanningTree apply_flip(const SpanningTree& t, EdgeId remove, EdgeId add);

struct Constraint {
  enum class Kind { None, MaxDegLe, MaxDegGe, DiamLe, DiamGe };
  Kind kind = Kind::None;
  int d = 0;

  static Constraint none() { return {}; }
  static Constraint max_deg_le(int d) { return {Kind::MaxDegLe, d}; }
  static Constraint max_deg_ge(int d) { return {Kind::MaxDegGe, d}; }
  static Constraint diam_le(int d) { return {Kind::DiamLe, d}; }
  static Constraint diam_ge(int d) { return {Kind::DiamGe, d}; }

  bool satisfied_by(const Graph& g, const EdgeSet& tree) const;
  std::string to_string() const;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Parses "none", "max-deg-le", "max-deg-ge", "diam-le", "diam-ge".
std::optional<Constraint::Kind> parse_constraint_kind(const std::string& text);
std::string constraint_kind_name(Constraint::Kind kind);

/// Tree diameter in true units (edges), or -1 if `tree` is not connected.
int tree_diameter(const Graph& g, const EdgeSet& tree);

struct FlipStep {
  EdgeId removed = 0;
  EdgeId added = 0;
  friend bool operator==(const FlipStep&, const FlipStep&) = default;
};

/// trees[0] is the start; trees[i+1] = trees[i] - steps[i].removed + steps[i].added.
struct ReconfSequence {
  Constraint constraint;
  std::vector<SpanningTree> trees;
  std::vector<FlipStep> steps;

  /// Single-tree sequence.
  ReconfSequence(Constraint c, SpanningTree start) : constraint(c), trees{std::move(start)} {}

  const SpanningTree& front() const { return trees.front(); }
  const SpanningTree& back() const { return trees.back(); }
  std::size_t length() const { return steps.size(); }

  /// Appends one flip from back(); throws if the flip is invalid.
  void push(EdgeId remove, EdgeId add);
  /// Appends a sequence starting at back(). Throws std::invalid_argument on mismatch.
  void append(const ReconfSequence& tail);
  /// The same sequence walked backwards.
  ReconfSequence reversed() const;
};

/// Plain exchange sequence: every intermediate tree keeps E(t) ∩ E(t2);
/// length |E(t) \ E(t2)|. Added edges are taken in increasing id order and
/// the removed edge is the smallest cycle edge outside t2.
ReconfSequence unconstrained_sequence(const SpanningTree& t, const SpanningTree& t2,
                                      Constraint tag = Constraint::none());

struct SequenceCheck {
  bool ok = true;
  std::size_t index = 0;  // offending tree or step index
  std::string reason;
};
SequenceCheck validate_sequence(const Graph& g, const ReconfSequence& seq);

}  // namespace rst
