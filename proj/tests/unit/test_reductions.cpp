#include <doctest.h>

#include <random>

#include "graph_families.hpp"
#include "rst/hampath.hpp"
#include "rst/ncl.hpp"
#include "rst/oracle.hpp"

using namespace rst;
using namespace rst::testing;

namespace {

// Two OR vertices joined by three weight-2 edges.
NCLGraph or_pair() {
  NCLGraph h;
  h.kinds = {NCLGraph::Kind::Or, NCLGraph::Kind::Or};
  h.edges = {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
  return h;
}

// Two AND vertices sharing their heavy edge and both light edges.
NCLGraph and_pair() {
  NCLGraph h;
  h.kinds = {NCLGraph::Kind::And, NCLGraph::Kind::And};
  h.edges = {{0, 1, 2}, {0, 1, 1}, {0, 1, 1}};
  return h;
}

}  // namespace

TEST_CASE("NCL structure and configuration checks") {
  NCLGraph h = or_pair();
  CHECK_FALSE(ncl_structure_error(h).has_value());
  NCLOrientation all_in{{0, 0, 0}};
  CHECK_FALSE(validate_ncl(h, all_in));  // vertex 1 gets nothing
  CHECK(validate_ncl(h, NCLOrientation{{0, 1, 0}}));
  CHECK(ncl_in_weight(h, all_in, 0) == 6);

  NCLGraph a = and_pair();
  CHECK_FALSE(ncl_structure_error(a).has_value());
  CHECK_FALSE(validate_ncl(a, NCLOrientation{{1, 0, 1}}));  // vertex 0 only gets one weight-1 edge
  NCLGraph bad = a;
  bad.edges[1].weight = 2;  // AND vertex with weights (2,2,1)
  CHECK(ncl_structure_error(bad).has_value());
  CHECK_THROWS_AS(ncl_to_rst(bad, 3), std::invalid_argument);
  CHECK_THROWS_AS(ncl_to_rst(a, 2), std::invalid_argument);
}

TEST_CASE("connector tree shape") {
  auto two = build_connector_tree({0, 1}, 10);
  CHECK(two.fresh == 1);
  CHECK(two.edges.size() == 2);
  auto three = build_connector_tree({0, 1, 2}, 10);
  CHECK(three.fresh == 1);
  for (std::size_t k = 2; k <= 9; ++k) {
    std::vector<VertexId> leaves;
    for (std::size_t i = 0; i < k; ++i) leaves.push_back(static_cast<VertexId>(i));
    auto ct = build_connector_tree(leaves, 100);
    std::vector<std::pair<VertexId, VertexId>> edges = ct.edges;
    int n = 100 + ct.fresh;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : edges) {
      ++deg[static_cast<std::size_t>(a)];
      ++deg[static_cast<std::size_t>(b)];
    }
    CHECK(static_cast<int>(edges.size()) == static_cast<int>(k) + ct.fresh - 1);  // a tree on its vertices
    for (std::size_t i = 0; i < k; ++i) CHECK(deg[i] == 1);
    for (int v = 100; v < n; ++v) {
      CHECK(deg[static_cast<std::size_t>(v)] >= 2);
      CHECK(deg[static_cast<std::size_t>(v)] <= 3);
    }
  }
}

TEST_CASE("NCL gadget sizes") {
  NCLGraph a = and_pair();
  for (int d = 3; d <= 5; ++d) {
    NCLInstance inst = ncl_to_rst(a, d);
    for (const auto& ge : inst.gadget_edges) CHECK(ge.size() == 7);
    for (const auto& iv : inst.incidence_vertex) {
      CHECK(inst.b[static_cast<std::size_t>(iv[0])] == 2);
      CHECK(inst.b[static_cast<std::size_t>(iv[1])] == 2);
    }
    const Graph& g = *inst.graph;
    for (VertexId v = 0; v < inst.core_vertex_count; ++v) {
      int pend = 0;
      for (const auto& inc : g.incident(v)) pend += edge_set_contains(inst.pendant_edges, inc.edge);
      CHECK(pend == d - inst.b[static_cast<std::size_t>(v)]);
    }
  }
}

TEST_CASE("configurations round-trip through trees") {
  for (const NCLGraph& h : {or_pair(), and_pair()}) {
    NCLInstance inst = ncl_to_rst(h, 3);
    auto configs = all_ncl_configurations(h);
    CHECK_FALSE(configs.empty());
    for (const auto& s : configs) {
      SpanningTree t = tree_of_orientation(inst, s);
      CHECK(t.max_degree() <= 3);
      CHECK_FALSE(gadget_property_violation(inst, t).has_value());
      CHECK(orientation_of_tree(inst, t) == s);
    }
    for (const auto& s1 : configs)
      for (const auto& s2 : configs) {
        if (ncl_distance(s1, s2) > 1) continue;
        auto seq = ncl_step_sequence(inst, tree_of_orientation(inst, s1), tree_of_orientation(inst, s2));
        CHECK(validate_sequence(*inst.graph, seq).ok);
        for (const auto& t : seq.trees) CHECK_FALSE(gadget_property_violation(inst, t).has_value());
      }
  }
}

TEST_CASE("every degree-bounded tree of a small reduced instance is a gadget tree") {
  NCLInstance inst = ncl_to_rst(or_pair(), 3);
  const Graph& g = *inst.graph;
  std::size_t count = 0;
  for_each_spanning_tree(g, [&](const EdgeSet& e) {
    SpanningTree t(g, e);
    CHECK_FALSE(gadget_property_violation(inst, t).has_value());
    CHECK(validate_ncl(inst.h, orientation_of_tree(inst, t)));
    ++count;
  }, kDefaultTreeCap, 3);
  CHECK(count > 0);
}

TEST_CASE("Hamiltonian path reduction") {
  Graph gp(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});
  HamInstance inst = hampath_to_rst(gp, 0, 3);
  CHECK(inst.d == 7 * 4 + 1);
  CHECK(inst.py.size() == 4 - 2);
  CHECK(inst.px.size() == 12);
  CHECK(inst.pz.size() == 12);
  CHECK(edge_set_intersection(inst.t_ini->edges(), inst.diamond_edges()) ==
        make_edge_set({inst.e_tt1, inst.e_t1t2, inst.e_t2t3}));
  CHECK(edge_set_intersection(inst.t_tar->edges(), inst.diamond_edges()) ==
        make_edge_set({inst.e_tt2, inst.e_t1t2, inst.e_t1t3}));
  CHECK(tree_diameter(*inst.graph, inst.t_ini->edges()) >= inst.d);
  CHECK(tree_diameter(*inst.graph, inst.t_tar->edges()) >= inst.d);

  auto hp = oracle_hampath(gp, 0, 3);
  REQUIRE(hp.has_value());
  auto seq = hampath_certificate_sequence(inst, *hp);
  CHECK(validate_sequence(*inst.graph, seq).ok);
  CHECK(seq.back() == *inst.t_tar);
  auto back = extract_hampath(inst, seq);
  REQUIRE(back.has_value());
  CHECK(is_hamiltonian_path(gp, *back, 0, 3));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) CHECK(check_diameter_domination(inst, random_spanning_tree(*inst.graph, rng)));

  CHECK_THROWS_AS(hampath_certificate_sequence(inst, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(hampath_to_rst(gp, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(hampath_to_rst(Graph(4, {{0, 1}, {2, 3}}), 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(hampath_to_rst(Graph(3, {{0, 1}, {1, 2}, {0, 2}}), 0, 2),
                  std::invalid_argument);
  CHECK_NOTHROW(hampath_to_rst(path_graph(3), 0, 2));
}

TEST_CASE("split forest has two components") {
  Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 4}});
  EdgeSet f = split_forest(g, 0, 3);
  CHECK(f.size() == 4);
  UnionFind uf(6);
  for (EdgeId e : f) CHECK(uf.unite(g.edge(e).u, g.edge(e).v));
  CHECK_FALSE(uf.same(0, 3));
}
