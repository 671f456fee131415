#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rst/graph.hpp"
#include "rst/sequence.hpp"

namespace rst::testing {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);

/// Connected graphs on n vertices, one per isomorphism class (n <= 6),
/// ordered by edge count and then by canonical code.
std::vector<Graph> connected_graphs(int n);
/// All connected graphs with 1..max_n vertices.
std::vector<Graph> connected_graphs_up_to(int max_n);

/// Connected G(n, p) sample: a random spanning tree plus independent extra edges.
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);
/// Kruskal over a shuffled edge order.
SpanningTree random_spanning_tree(const Graph& g, std::mt19937_64& rng);

/// Number of spanning trees via the matrix-tree theorem (exact for n <= 12).
std::int64_t matrix_tree_count(const Graph& g);

EdgeSet star_tree(const Graph& g, VertexId center);

}  // namespace rst::testing
