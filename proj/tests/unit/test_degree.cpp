#include <doctest.h>

#include <random>

#include "graph_families.hpp"
#include "rst/degree.hpp"
#include "rst/oracle.hpp"

using namespace rst;
using namespace rst::testing;

namespace {

Graph double_hub() {
  // Hubs 0 and 1 joined, each with three private leaves.
  return Graph(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 7}});
}

}  // namespace

TEST_CASE("high degree sets") {
  Graph s = star_graph(3);
  SpanningTree t(s, {1, 2, 3});
  CHECK(high_degree_set(t, 3) == std::vector<VertexId>{0});
  Graph p = path_graph(4);
  SpanningTree tp(p, {1, 2, 3});
  CHECK(high_degree_set(tp, 3).empty());
  CHECK(high_degree_set(tp, 2) == std::vector<VertexId>{1, 2});
}

TEST_CASE("hub graph edge formula examples") {
  Graph k4 = complete_graph(4);
  CHECK_FALSE(degree_aux_edge(k4, 3, 0, 1));
  CHECK_FALSE(oracle_degree_pair(k4, 3, 0, 1));
  Graph s = star_graph(4);
  CHECK_FALSE(degree_aux_edge(s, 2, 0, 1));
  Graph h = double_hub();
  CHECK(degree_aux_edge(h, 3, 0, 1));
  CHECK(oracle_degree_pair(h, 3, 0, 1));
  auto w = degree_aux_witness(h, 3, 0, 1);
  REQUIRE(w.has_value());
  CHECK(are_flip_adjacent(w->first, w->second));
  CHECK(w->first.degrees()[0] >= 3);
  CHECK(w->second.degrees()[1] >= 3);
  CHECK_FALSE(degree_aux_witness(h, 3, 0, 0).has_value());
  CHECK_FALSE(degree_aux_witness(k4, 3, 0, 1).has_value());
}

TEST_CASE("hub graph formula agrees with tree-pair search on n <= 5") {
  for (const Graph& g : connected_graphs_up_to(5)) {
    for (int d = 1; d <= 4; ++d) {
      auto truth = oracle_degree_pairs(g, d);
      int n = g.vertex_count();
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v) {
          if (u == v) continue;
          bool formula = degree_aux_edge(g, d, u, v);
          CHECK(formula == static_cast<bool>(truth[static_cast<std::size_t>(u * n + v)]));
          auto w = degree_aux_witness(g, d, u, v);
          CHECK(w.has_value() == formula);
          if (w) {
            CHECK(are_flip_adjacent(w->first, w->second));
            CHECK(w->first.degrees()[static_cast<std::size_t>(u)] >= d);
            CHECK(w->second.degrees()[static_cast<std::size_t>(v)] >= d);
          }
        }
    }
  }
}

TEST_CASE("shared hub sequences keep the hub") {
  Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}});
  for (const auto& a : enumerate_spanning_trees(g))
    for (const auto& b : enumerate_spanning_trees(g)) {
      SpanningTree t1(g, a), t2(g, b);
      if (t1.degrees()[0] < 3 || t2.degrees()[0] < 3) {
        if (t1.degrees()[0] < 3) CHECK_THROWS_AS(shared_hub_sequence(t1, t2, 0, 3), std::invalid_argument);
        continue;
      }
      auto seq = shared_hub_sequence(t1, t2, 0, 3);
      CHECK(seq.back() == t2);
      CHECK(validate_sequence(g, seq).ok);
      for (const auto& t : seq.trees) CHECK(t.degrees()[0] >= 3);
    }
}

TEST_CASE("large max degree decisions") {
  Graph k4 = complete_graph(4);
  SpanningTree su(k4, star_tree(k4, 0)), sv(k4, star_tree(k4, 1));
  CHECK_FALSE(decide_large_max_degree(k4, 3, su, sv));
  CHECK(decide_large_max_degree(k4, 3, su, su));
  CHECK_FALSE(sequence_large_max_degree(k4, 3, su, sv).has_value());
  CHECK_THROWS_AS(decide_large_max_degree(k4, 3, su, SpanningTree(k4, {1, 4, 6})), std::invalid_argument);

  for (const Graph& g : connected_graphs_up_to(5)) {
    for (int d = 2; d <= 3; ++d) {
      Constraint c = Constraint::max_deg_ge(d);
      FlipGraph fg(g, c);
      LargeDegreeSolver solver(g, d);
      for (std::size_t i = 0; i < fg.size(); ++i)
        for (std::size_t j = 0; j < fg.size(); ++j) {
          SpanningTree a(g, fg.tree(i)), b(g, fg.tree(j));
          bool expect = fg.component(i) == fg.component(j);
          CHECK(solver.decide(a, b) == expect);
          auto seq = solver.sequence(a, b);
          CHECK(seq.has_value() == expect);
          if (seq) {
            CHECK(validate_sequence(g, *seq).ok);
            CHECK(seq->front() == a);
            CHECK(seq->back() == b);
          }
        }
    }
  }
}

TEST_CASE("hub graph construction is independent of the thread count") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5; ++i) {
    Graph g = random_connected_graph(12, 0.4, rng);
    auto a = build_degree_aux_graph(g, 4, 1);
    auto b = build_degree_aux_graph(g, 4, 3);
    CHECK(a.edges == b.edges);
  }
}

TEST_CASE("swap edge and the relaxed small degree sequence") {
  Graph c4 = cycle_graph(4);
  SpanningTree a(c4, {1, 2, 3}), b(c4, {1, 2, 4});
  CHECK_THROWS_AS(find_swap_edge(a, a, 3), std::invalid_argument);
  CHECK(find_swap_edge(a, b, 3) == 4);
  auto seq = relaxed_small_degree_sequence(c4, 3, a, b);
  CHECK(seq.length() == 1);
  CHECK(relaxed_small_degree_sequence(c4, 3, a, a).length() == 0);

  for (const Graph& g : connected_graphs_up_to(5)) {
    for (int d = 2; d <= 4; ++d) {
      Constraint c = Constraint::max_deg_le(d);
      FlipGraph fg(g, c);
      for (std::size_t i = 0; i < fg.size(); ++i)
        for (std::size_t j = 0; j < fg.size(); ++j) {
          SpanningTree x(g, fg.tree(i)), y(g, fg.tree(j));
          if (!relaxed_precondition(d, x, y)) {
            CHECK_THROWS_AS(relaxed_small_degree_sequence(g, d, x, y), std::invalid_argument);
            continue;
          }
          if (!(x == y) && y.max_degree() <= d - 1) CHECK_NOTHROW(find_swap_edge(x, y, d));
          auto s = relaxed_small_degree_sequence(g, d, x, y);
          CHECK(validate_sequence(g, s).ok);
          CHECK(s.back() == y);
          auto shortest = fg.shortest_path(i, j);
          REQUIRE(shortest.has_value());
          CHECK(s.length() == shortest->size() - 1);
          CHECK(s.length() == edge_set_difference(x.edges(), y.edges()).size());
        }
    }
  }
}
