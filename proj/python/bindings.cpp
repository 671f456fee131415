#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rst/degree.hpp"
#include "rst/diameter.hpp"
#include "rst/hampath.hpp"
#include "rst/ncl.hpp"
#include "rst/oracle.hpp"

namespace py = pybind11;
using namespace rst;

namespace {

Constraint constraint_from(const std::string& kind, int d) {
  auto k = parse_constraint_kind(kind);
  if (!k) throw py::value_error("unknown constraint: " + kind);
  return Constraint{*k, d};
}

py::list steps_to_list(const ReconfSequence& seq) {
  py::list out;
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    py::dict step;
    step["remove"] = seq.steps[i].removed;
    step["add"] = seq.steps[i].added;
    step["edges"] = seq.trees[i + 1].edges();
    out.append(step);
  }
  return out;
}

std::pair<bool, std::optional<ReconfSequence>> solve(const Graph& g, Constraint c, const SpanningTree& s,
                                                     const SpanningTree& t, bool relaxed, bool want_sequence) {
  for (const auto* tree : {&s, &t})
    if (!c.satisfied_by(g, tree->edges())) throw py::value_error("a tree violates " + c.to_string());
  switch (c.kind) {
    case Constraint::Kind::None:
      return {true, want_sequence ? std::optional(unconstrained_sequence(s, t)) : std::nullopt};
    case Constraint::Kind::MaxDegGe:
      if (!want_sequence) return {decide_large_max_degree(g, c.d, s, t), std::nullopt};
      if (auto seq = sequence_large_max_degree(g, c.d, s, t)) return {true, seq};
      return {false, std::nullopt};
    case Constraint::Kind::DiamLe:
      if (!want_sequence) return {decide_small_diameter(g, c.d, s, t), std::nullopt};
      if (auto seq = sequence_small_diameter(g, c.d, s, t)) return {true, seq};
      return {false, std::nullopt};
    case Constraint::Kind::MaxDegLe:
      if (!relaxed || !relaxed_precondition(c.d, s, t))
        throw py::value_error("max-deg-le needs relaxed=True and one tree at max degree <= d-1");
      return {true, want_sequence ? std::optional(relaxed_small_degree_sequence(g, c.d, s, t)) : std::nullopt};
    case Constraint::Kind::DiamGe:
      throw py::value_error("diam-ge has no polynomial solver; use oracle_decide");
  }
  throw py::value_error("unsupported constraint");
}

py::dict instance_dict(const Graph& g, const SpanningTree& ini, const SpanningTree& tar, Constraint c) {
  py::list edges;
  for (EdgeId e = 1; e <= g.edge_count(); ++e) edges.append(py::make_tuple(g.edge(e).u, g.edge(e).v));
  py::dict out;
  out["n"] = g.vertex_count();
  out["edges"] = edges;
  out["ini"] = ini.edges();
  out["tar"] = tar.edges();
  out["constraint"] = constraint_kind_name(c.kind);
  out["d"] = c.d;
  return out;
}

NCLGraph ncl_from(const std::vector<std::string>& kinds, const std::vector<std::tuple<int, int, int>>& edges) {
  NCLGraph h;
  for (const auto& k : kinds) {
    if (k == "AND") h.kinds.push_back(NCLGraph::Kind::And);
    else if (k == "OR") h.kinds.push_back(NCLGraph::Kind::Or);
    else throw py::value_error("vertex kind must be AND or OR");
  }
  for (auto [u, v, w] : edges) h.edges.push_back({u, v, w});
  return h;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spanning tree reconfiguration under degree and diameter constraints";

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, std::vector<std::pair<VertexId, VertexId>>>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<VertexId, VertexId>> out;
             for (EdgeId e = 1; e <= g.edge_count(); ++e) out.emplace_back(g.edge(e).u, g.edge(e).v);
             return out;
           })
      .def("is_connected", &Graph::is_connected)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("is_spanning_tree", &validate_spanning_tree, py::arg("graph"), py::arg("edges"));
  m.def(
      "tree_diameter", [](const Graph& g, std::vector<EdgeId> t) { return tree_diameter(g, make_edge_set(std::move(t))); },
      py::arg("graph"), py::arg("edges"));
  m.def(
      "spanning_trees", [](const Graph& g, std::size_t cap) { return enumerate_spanning_trees(g, cap); },
      py::arg("graph"), py::arg("cap") = kDefaultTreeCap);

  m.def(
      "decide",
      [](const Graph& g, std::vector<EdgeId> ini, std::vector<EdgeId> tar, const std::string& constraint, int d,
         bool relaxed) {
        return solve(g, constraint_from(constraint, d), SpanningTree(g, std::move(ini)), SpanningTree(g, std::move(tar)),
                     relaxed, false)
            .first;
      },
      py::arg("graph"), py::arg("ini"), py::arg("tar"), py::arg("constraint"), py::arg("d") = 0,
      py::arg("relaxed") = false);
  m.def(
      "sequence",
      [](const Graph& g, std::vector<EdgeId> ini, std::vector<EdgeId> tar, const std::string& constraint, int d,
         bool relaxed) -> py::object {
        auto [yes, seq] = solve(g, constraint_from(constraint, d), SpanningTree(g, std::move(ini)),
                                SpanningTree(g, std::move(tar)), relaxed, true);
        if (!yes) return py::none();
        return steps_to_list(*seq);
      },
      py::arg("graph"), py::arg("ini"), py::arg("tar"), py::arg("constraint"), py::arg("d") = 0,
      py::arg("relaxed") = false);
  m.def(
      "validate_sequence",
      [](const Graph& g, std::vector<EdgeId> ini, const std::vector<std::pair<EdgeId, EdgeId>>& steps,
         const std::string& constraint, int d) -> py::tuple {
        ReconfSequence seq(constraint_from(constraint, d), SpanningTree(g, std::move(ini)));
        try {
          for (auto [r, a] : steps) seq.push(r, a);
        } catch (const std::invalid_argument& e) {
          return py::make_tuple(false, seq.length(), std::string(e.what()));
        }
        auto check = validate_sequence(g, seq);
        return py::make_tuple(check.ok, check.index, check.reason);
      },
      py::arg("graph"), py::arg("ini"), py::arg("steps"), py::arg("constraint"), py::arg("d") = 0,
      "steps are (removed, added) pairs; returns (ok, index, reason)");
  m.def(
      "oracle_decide",
      [](const Graph& g, std::vector<EdgeId> ini, std::vector<EdgeId> tar, const std::string& constraint, int d,
         std::size_t cap) {
        return oracle_decide(g, constraint_from(constraint, d), SpanningTree(g, std::move(ini)),
                             SpanningTree(g, std::move(tar)), cap)
            .reachable;
      },
      py::arg("graph"), py::arg("ini"), py::arg("tar"), py::arg("constraint"), py::arg("d") = 0,
      py::arg("cap") = kDefaultTreeCap);

  m.def("degree_aux_edge", &degree_aux_edge, py::arg("graph"), py::arg("d"), py::arg("u"), py::arg("v"));
  m.def(
      "center_graph",
      [](const Graph& g, int d) {
        auto aux = build_center_aux_graph(g, d);
        std::vector<std::tuple<std::string, std::string, EdgeSet>> out;
        for (const auto& e : aux.edges)
          out.emplace_back(to_string(aux.points[static_cast<std::size_t>(e.a)]),
                           to_string(aux.points[static_cast<std::size_t>(e.b)]), e.witness);
        return out;
      },
      py::arg("graph"), py::arg("d"), "edges (point, point, witness edge ids) of the center graph");

  m.def(
      "ncl_to_rst",
      [](const std::vector<std::string>& kinds, const std::vector<std::tuple<int, int, int>>& edges,
         const std::vector<int>& ini_heads, const std::vector<int>& tar_heads, int d) {
        NCLInstance inst = ncl_to_rst(ncl_from(kinds, edges), d, NCLOrientation{ini_heads}, NCLOrientation{tar_heads});
        return instance_dict(*inst.graph, *inst.t_ini, *inst.t_tar, Constraint::max_deg_le(d));
      },
      py::arg("kinds"), py::arg("edges"), py::arg("ini_heads"), py::arg("tar_heads"), py::arg("d") = 3);
  m.def(
      "hampath_to_rst",
      [](const Graph& g, VertexId s, VertexId t) {
        HamInstance inst = hampath_to_rst(g, s, t);
        return instance_dict(*inst.graph, *inst.t_ini, *inst.t_tar, Constraint::diam_ge(inst.d));
      },
      py::arg("graph"), py::arg("s"), py::arg("t"));
  m.def("hampath", &oracle_hampath, py::arg("graph"), py::arg("s"), py::arg("t"));

  py::register_exception<CapExceeded>(m, "CapExceeded");
}
