#include <doctest.h>

#include "graph_families.hpp"
#include "rst/oracle.hpp"

using namespace rst;
using namespace rst::testing;

TEST_CASE("spanning tree counts") {
  CHECK(enumerate_spanning_trees(cycle_graph(3)).size() == 3);
  CHECK(enumerate_spanning_trees(cycle_graph(4)).size() == 4);
  CHECK(enumerate_spanning_trees(complete_graph(4)).size() == 16);
  for (const Graph& g : connected_graphs_up_to(6)) {
    auto trees = enumerate_spanning_trees(g);
    CHECK(static_cast<std::int64_t>(trees.size()) == matrix_tree_count(g));
    for (const auto& t : trees) CHECK(validate_spanning_tree(g, t));
  }
  CHECK(matrix_tree_count(complete_graph(8)) == 262144);
  CHECK(static_cast<std::int64_t>(enumerate_spanning_trees(complete_graph(7)).size()) == 16807);
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate_spanning_trees(complete_graph(6), 100), CapExceeded);
}

TEST_CASE("degree pruning keeps exactly the bounded trees") {
  Graph k5 = complete_graph(5);
  std::size_t pruned = 0;
  for_each_spanning_tree(k5, [&](const EdgeSet& t) {
    CHECK(Constraint::max_deg_le(2).satisfied_by(k5, t));
    ++pruned;
  }, kDefaultTreeCap, 2);
  std::size_t counted = 0;
  for (const auto& t : enumerate_spanning_trees(k5)) counted += Constraint::max_deg_le(2).satisfied_by(k5, t);
  CHECK(pruned == counted);
  CHECK(counted == 60);  // Hamiltonian paths of K5
}

TEST_CASE("oracle decisions") {
  Graph k4 = complete_graph(4);
  SpanningTree su(k4, star_tree(k4, 0)), sv(k4, star_tree(k4, 1));
  CHECK(oracle_decide(k4, Constraint::none(), su, sv).reachable);
  CHECK_FALSE(oracle_decide(k4, Constraint::diam_le(2), su, sv).reachable);
  CHECK_FALSE(oracle_decide(k4, Constraint::max_deg_ge(3), su, sv).reachable);
  Graph c4 = cycle_graph(4);
  auto trees = enumerate_spanning_trees(c4);
  for (const auto& a : trees)
    for (const auto& b : trees)
      CHECK(oracle_decide(c4, Constraint::max_deg_le(2), SpanningTree(c4, a), SpanningTree(c4, b)).reachable);
  CHECK_THROWS_AS(oracle_decide(k4, Constraint::diam_le(1), su, sv), std::invalid_argument);
}

TEST_CASE("unconstrained oracle length equals the exchange bound") {
  for (const Graph& g : connected_graphs_up_to(5)) {
    FlipGraph fg(g, Constraint::none());
    for (std::size_t i = 0; i < fg.size(); ++i)
      for (std::size_t j = 0; j < fg.size(); ++j) {
        auto path = fg.shortest_path(i, j);
        REQUIRE(path.has_value());
        CHECK(path->size() - 1 == edge_set_difference(fg.tree(i), fg.tree(j)).size());
      }
  }
}

TEST_CASE("shortest oracle sequences validate") {
  Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {1, 3}});
  auto trees = enumerate_spanning_trees(g);
  Constraint c = Constraint::max_deg_le(2);
  std::vector<EdgeSet> ok;
  for (const auto& t : trees)
    if (c.satisfied_by(g, t)) ok.push_back(t);
  for (const auto& a : ok)
    for (const auto& b : ok) {
      auto ans = oracle_decide(g, c, SpanningTree(g, a), SpanningTree(g, b));
      if (ans.reachable) {
        REQUIRE(ans.sequence.has_value());
        CHECK(validate_sequence(g, *ans.sequence).ok);
        CHECK(ans.sequence->back().edges() == b);
      }
    }
}

TEST_CASE("pseudotree enumeration and centers") {
  Graph c4 = cycle_graph(4);
  auto ps = enumerate_pseudotrees(c4);
  CHECK(ps.size() == 5);
  CHECK(oracle_center_pair(c4, 3, Point::mid(1), Point::mid(3)));
  CHECK_FALSE(oracle_center_pair(c4, 2, Point::mid(1), Point::mid(3)));
  auto q = oracle_good_triple(c4, 3, Point::mid(1), Point::mid(3));
  REQUIRE(q.has_value());
}

TEST_CASE("Hamiltonian path search") {
  Graph p = path_graph(5);
  auto hp = oracle_hampath(p, 0, 4);
  REQUIRE(hp.has_value());
  CHECK(hp->size() == 5);
  CHECK_FALSE(oracle_hampath(p, 0, 3).has_value());
  CHECK_FALSE(oracle_hampath(star_graph(3), 1, 2).has_value());
  CHECK(oracle_hampath(complete_graph(5), 1, 3).has_value());
}
