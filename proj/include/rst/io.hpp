#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "rst/degree.hpp"
#include "rst/diameter.hpp"
#include "rst/graph.hpp"
#include "rst/hampath.hpp"
#include "rst/ncl.hpp"
#include "rst/sequence.hpp"

namespace rst {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// "n m" then m lines "u v" (0-based); '#' starts a comment.
Graph read_graph(std::istream& in);
Graph load_graph(const std::filesystem::path& path);
void write_graph(std::ostream& out, const Graph& g);

/// Whitespace-separated edge ids.
EdgeSet read_edge_ids(std::istream& in);
SpanningTree load_tree(const Graph& g, const std::filesystem::path& path);
void write_edge_ids(std::ostream& out, const EdgeSet& ids);

/// "v AND" / "v OR" lines (vertices numbered in order), then "u v w" edges.
NCLGraph read_ncl(std::istream& in);
NCLGraph load_ncl(const std::filesystem::path& path);
void write_ncl(std::ostream& out, const NCLGraph& h);
/// One "u->v" line per edge, in edge order.
NCLOrientation read_orientation(const NCLGraph& h, std::istream& in);
NCLOrientation load_orientation(const NCLGraph& h, const std::filesystem::path& path);

/// [{"remove": r, "add": a, "edges": [...]}, ...]; "edges" is the tree after the step.
nlohmann::json sequence_to_json(const ReconfSequence& seq);
/// Replays the steps from `start`; throws ParseError on malformed input or
/// when a listed edge set disagrees with the replayed tree.
ReconfSequence sequence_from_json(const SpanningTree& start, Constraint c, const nlohmann::json& j);

std::string degree_aux_dot(const DegreeAuxGraph& aux);
std::string center_aux_dot(const Graph& g, const CenterAuxGraph& aux);
nlohmann::json center_aux_json(const Graph& g, const CenterAuxGraph& aux);

/// Writes graph.txt, ini.tree, tar.tree and instance.json into `dir`.
void write_bundle(const std::filesystem::path& dir, const Graph& g, const SpanningTree& t_ini,
                  const SpanningTree& t_tar, Constraint c, const nlohmann::json& provenance);
nlohmann::json ncl_provenance(const NCLInstance& inst);
nlohmann::json ham_provenance(const HamInstance& inst);

}  // namespace rst
