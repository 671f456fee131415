#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rst/graph.hpp"
#include "rst/sequence.hpp"

namespace rst {

/// Large-diameter instance built from a Hamiltonian s-t path question.
/// Vertices of g' keep their ids in G and its edges keep ids 1..m'.
struct HamInstance {
  std::shared_ptr<const Graph> source;  // g'
  VertexId s = 0;
  VertexId t = 0;
  int n_prime = 0;
  int d = 0;  // 7n' + 1
  std::shared_ptr<const Graph> graph;

  VertexId t1 = 0, t2 = 0, t3 = 0;
  std::vector<VertexId> x;  // x_1 .. x_{3n'}
  std::vector<VertexId> y;  // y_1 .. y_{n'-3}
  std::vector<VertexId> z;  // z_1 .. z_{3n'}
  EdgeId e_tt1 = 0, e_tt2 = 0, e_t1t2 = 0, e_t1t3 = 0, e_t2t3 = 0;
  EdgeSet px, py, pz;  // P_x, P_y, P_z
  std::vector<EdgeId> py_order;  // P_y from s' to t'
  EdgeSet forest;      // F'
  std::vector<std::string> names;

  std::optional<SpanningTree> t_ini;
  std::optional<SpanningTree> t_tar;

  EdgeSet diamond_edges() const { return make_edge_set({e_tt1, e_tt2, e_t1t2, e_t1t3, e_t2t3}); }
  bool is_source_edge(EdgeId e) const { return e >= 1 && e <= source->edge_count(); }
};

/// Throws std::invalid_argument if g' is disconnected, s == t, n' < 3, or
/// n' == 3 with s t already an edge (P_y would duplicate it).
HamInstance hampath_to_rst(const Graph& g_prime, VertexId s, VertexId t);

/// Two-component spanning forest of g': breadth-first from s avoiding t,
/// then breadth-first from t over the rest. Edge ids are those of g'.
EdgeSet split_forest(const Graph& g_prime, VertexId s, VertexId t);

/// Sequence t_ini -> t_tar keeping diameter >= d, built from a Hamiltonian
/// s-t path of g' given as a vertex list. Throws if `path` is not one.
ReconfSequence hampath_certificate_sequence(const HamInstance& inst, const std::vector<VertexId>& path);

/// The s-t path of the first tree whose diamond edges change, if it is a
/// Hamiltonian path of g'.
std::optional<std::vector<VertexId>> extract_hampath(const HamInstance& inst, const ReconfSequence& seq);

bool is_hamiltonian_path(const Graph& g, const std::vector<VertexId>& path, VertexId s, VertexId t);

/// diam(t) equals the tree distance between x_{3n'} and z_{3n'}.
bool check_diameter_domination(const HamInstance& inst, const SpanningTree& t);

}  // namespace rst
