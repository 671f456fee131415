#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "graph_families.hpp"
#include "rst/io.hpp"

using namespace rst;
using namespace rst::testing;

TEST_CASE("graph text round trip") {
  std::istringstream in("# a 4-cycle\n4 4\n0 1\n1 2\n2 3\n3 0\n");
  Graph g = read_graph(in);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge(4).u == 3);
  std::ostringstream out;
  write_graph(out, g);
  std::istringstream again(out.str());
  Graph h = read_graph(again);
  CHECK(h.edge_count() == 4);
  std::istringstream short_file("3 2\n0 1\n");
  CHECK_THROWS_AS(read_graph(short_file), ParseError);
  std::istringstream loop("2 1\n1 1\n");
  CHECK_THROWS_AS(read_graph(loop), ParseError);
}

TEST_CASE("edge id lists") {
  std::istringstream in("3 1\n2\n");
  CHECK(read_edge_ids(in) == EdgeSet{1, 2, 3});
  std::istringstream bad("1 x\n");
  CHECK_THROWS_AS(read_edge_ids(bad), ParseError);
}

TEST_CASE("NCL files") {
  std::istringstream in("v OR\nv OR\n0 1 2\n0 1 2\n1 0 2\n");
  NCLGraph h = read_ncl(in);
  CHECK(h.vertex_count() == 2);
  CHECK(h.edges[2].u == 1);
  std::istringstream orient("0->1\n1->0\n0->1\n");
  auto s = read_orientation(h, orient);
  CHECK(s.head == std::vector<int>{1, 0, 1});
  std::istringstream wrong("0->2\n1->0\n0->1\n");
  CHECK_THROWS_AS(read_orientation(h, wrong), ParseError);
  std::istringstream not_cubic("v OR\nv OR\n0 1 2\n");
  CHECK_THROWS_AS(read_ncl(not_cubic), ParseError);
}

TEST_CASE("sequence JSON round trip") {
  Graph c4 = cycle_graph(4);
  SpanningTree a(c4, {1, 2, 3}), b(c4, {2, 3, 4});
  auto seq = unconstrained_sequence(a, b);
  auto j = sequence_to_json(seq);
  REQUIRE(j.is_array());
  CHECK(j[0]["remove"] == 1);
  CHECK(j[0]["add"] == 4);
  auto back = sequence_from_json(a, Constraint::none(), j);
  CHECK(back.back() == b);
  j[0]["edges"] = {1, 2, 3};
  CHECK_THROWS_AS(sequence_from_json(a, Constraint::none(), j), ParseError);
  CHECK_THROWS_AS(sequence_from_json(a, Constraint::none(), nlohmann::json::parse(R"([{"remove": 4, "add": 1}])")),
                  ParseError);
}

TEST_CASE("bundle files") {
  auto dir = std::filesystem::temp_directory_path() / "rst_bundle_test";
  std::filesystem::remove_all(dir);
  Graph c4 = cycle_graph(4);
  write_bundle(dir, c4, SpanningTree(c4, {1, 2, 3}), SpanningTree(c4, {2, 3, 4}), Constraint::diam_le(3),
               {{"note", "test"}});
  Graph g = load_graph(dir / "graph.txt");
  CHECK(load_tree(g, dir / "tar.tree").edges() == EdgeSet{2, 3, 4});
  std::ifstream meta(dir / "instance.json");
  auto j = nlohmann::json::parse(meta);
  CHECK(j["constraint"] == "diam-le");
  CHECK(j["d"] == 3);
  std::filesystem::remove_all(dir);
}
