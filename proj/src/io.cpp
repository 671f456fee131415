#include "rst/io.hpp"

#include <fstream>
#include <sstream>

namespace rst {

namespace {

// Input with '#' comments removed, split into non-empty lines.
std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

}  // namespace

Graph read_graph(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw ParseError("graph file is empty");
  std::istringstream head(lines[0]);
  int n = 0, m = 0;
  if (!(head >> n >> m) || n < 1 || m < 0) throw ParseError("bad graph header: " + lines[0]);
  if (static_cast<int>(lines.size()) != m + 1)
    throw ParseError("expected " + std::to_string(m) + " edge lines, found " + std::to_string(lines.size() - 1));
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 1; i <= m; ++i) {
    std::istringstream ls(lines[static_cast<std::size_t>(i)]);
    VertexId u = 0, v = 0;
    if (!(ls >> u >> v)) throw ParseError("bad edge line: " + lines[static_cast<std::size_t>(i)]);
    edges.emplace_back(u, v);
  }
  try {
    return Graph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Graph load_graph(const std::filesystem::path& path) {
  auto in = open(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (EdgeId e = 1; e <= g.edge_count(); ++e) out << g.edge(e).u << ' ' << g.edge(e).v << '\n';
}

EdgeSet read_edge_ids(std::istream& in) {
  std::vector<EdgeId> ids;
  for (const auto& line : content_lines(in)) {
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        ids.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw ParseError("bad edge id: " + tok);
      } catch (const std::logic_error&) {
        throw ParseError("bad edge id: " + tok);
      }
    }
  }
  return make_edge_set(std::move(ids));
}

SpanningTree load_tree(const Graph& g, const std::filesystem::path& path) {
  auto in = open(path);
  EdgeSet ids = read_edge_ids(in);
  for (EdgeId e : ids)
    if (!g.valid_edge(e)) throw ParseError(path.string() + ": edge id " + std::to_string(e) + " out of range");
  auto t = SpanningTree::make(g, ids);
  if (!t) throw ParseError(path.string() + " is not a spanning tree of the graph");
  return *t;
}

void write_edge_ids(std::ostream& out, const EdgeSet& ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
  out << '\n';
}

NCLGraph read_ncl(std::istream& in) {
  NCLGraph h;
  for (const auto& line : content_lines(in)) {
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (first == "v") {
      std::string kind;
      ls >> kind;
      if (kind == "AND" || kind == "and")
        h.kinds.push_back(NCLGraph::Kind::And);
      else if (kind == "OR" || kind == "or")
        h.kinds.push_back(NCLGraph::Kind::Or);
      else
        throw ParseError("unknown vertex kind: " + line);
      continue;
    }
    std::istringstream es(line);
    NCLGraph::Edge e;
    if (!(es >> e.u >> e.v >> e.weight)) throw ParseError("bad NCL line: " + line);
    h.edges.push_back(e);
  }
  if (auto err = ncl_structure_error(h)) throw ParseError(*err);
  return h;
}

NCLGraph load_ncl(const std::filesystem::path& path) {
  auto in = open(path);
  return read_ncl(in);
}

void write_ncl(std::ostream& out, const NCLGraph& h) {
  for (auto k : h.kinds) out << "v " << (k == NCLGraph::Kind::And ? "AND" : "OR") << '\n';
  for (const auto& e : h.edges) out << e.u << ' ' << e.v << ' ' << e.weight << '\n';
}

NCLOrientation read_orientation(const NCLGraph& h, std::istream& in) {
  NCLOrientation s;
  auto lines = content_lines(in);
  if (static_cast<int>(lines.size()) != h.edge_count())
    throw ParseError("orientation needs one line per edge (" + std::to_string(h.edge_count()) + ")");
  for (int e = 0; e < h.edge_count(); ++e) {
    const std::string& line = lines[static_cast<std::size_t>(e)];
    auto arrow = line.find("->");
    if (arrow == std::string::npos) throw ParseError("bad orientation line: " + line);
    int a = 0, b = 0;
    try {
      a = std::stoi(line.substr(0, arrow));
      b = std::stoi(line.substr(arrow + 2));
    } catch (const std::logic_error&) {
      throw ParseError("bad orientation line: " + line);
    }
    const auto& ed = h.edges[static_cast<std::size_t>(e)];
    if (!((a == ed.u && b == ed.v) || (a == ed.v && b == ed.u)))
      throw ParseError("orientation line " + std::to_string(e + 1) + " does not match edge " + std::to_string(e));
    s.head.push_back(b);
  }
  return s;
}

NCLOrientation load_orientation(const NCLGraph& h, const std::filesystem::path& path) {
  auto in = open(path);
  return read_orientation(h, in);
}

nlohmann::json sequence_to_json(const ReconfSequence& seq) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < seq.steps.size(); ++i)
    out.push_back({{"remove", seq.steps[i].removed}, {"add", seq.steps[i].added}, {"edges", seq.trees[i + 1].edges()}});
  return out;
}

ReconfSequence sequence_from_json(const SpanningTree& start, Constraint c, const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("sequence must be a JSON array");
  ReconfSequence seq(c, start);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& step = j[i];
    if (!step.is_object() || !step.contains("remove") || !step.contains("add"))
      throw ParseError("step " + std::to_string(i) + " needs remove and add");
    try {
      seq.push(step.at("remove").get<EdgeId>(), step.at("add").get<EdgeId>());
    } catch (const std::invalid_argument& e) {
      throw ParseError("step " + std::to_string(i) + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("step " + std::to_string(i) + ": " + e.what());
    }
    if (step.contains("edges") && make_edge_set(step.at("edges").get<std::vector<EdgeId>>()) != seq.back().edges())
      throw ParseError("step " + std::to_string(i) + ": listed edges differ from the replayed tree");
  }
  return seq;
}

std::string degree_aux_dot(const DegreeAuxGraph& aux) {
  std::ostringstream out;
  out << "graph degree_aux {\n";
  for (int v = 0; v < aux.vertex_count; ++v) out << "  v" << v << ";\n";
  for (auto [u, v] : aux.edges) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string center_aux_dot(const Graph& g, const CenterAuxGraph& aux) {
  std::ostringstream out;
  out << "graph center_aux {\n";
  for (const auto& p : aux.points) out << "  " << to_string(p) << ";\n";
  for (const auto& e : aux.edges) {
    const Point& a = aux.points[static_cast<std::size_t>(e.a)];
    const Point& b = aux.points[static_cast<std::size_t>(e.b)];
    out << "  " << to_string(a) << " -- " << to_string(b) << " [label=\"";
    for (std::size_t i = 0; i < e.witness.size(); ++i) out << (i ? " " : "") << e.witness[i];
    out << "\"" << (static_cast<int>(e.witness.size()) == g.vertex_count() ? ", style=dashed" : "") << "];\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json center_aux_json(const Graph&, const CenterAuxGraph& aux) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : aux.points) pts.push_back(to_string(p));
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : aux.edges)
    edges.push_back({{"a", to_string(aux.points[static_cast<std::size_t>(e.a)])},
                     {"b", to_string(aux.points[static_cast<std::size_t>(e.b)])},
                     {"witness", e.witness}});
  return {{"d", aux.d}, {"points", pts}, {"edges", edges}};
}

void write_bundle(const std::filesystem::path& dir, const Graph& g, const SpanningTree& t_ini,
                  const SpanningTree& t_tar, Constraint c, const nlohmann::json& provenance) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "graph.txt");
    write_graph(out, g);
  }
  {
    std::ofstream out(dir / "ini.tree");
    write_edge_ids(out, t_ini.edges());
  }
  {
    std::ofstream out(dir / "tar.tree");
    write_edge_ids(out, t_tar.edges());
  }
  nlohmann::json meta = {{"graph", "graph.txt"},
                         {"from", "ini.tree"},
                         {"to", "tar.tree"},
                         {"constraint", constraint_kind_name(c.kind)},
                         {"d", c.d},
                         {"provenance", provenance}};
  std::ofstream out(dir / "instance.json");
  out << meta.dump(2) << '\n';
  if (!out) throw std::runtime_error("cannot write " + (dir / "instance.json").string());
}

nlohmann::json ncl_provenance(const NCLInstance& inst) {
  nlohmann::json vertices = nlohmann::json::object();
  for (std::size_t v = 0; v < inst.names.size(); ++v) vertices[std::to_string(v)] = inst.names[v];
  nlohmann::json b = nlohmann::json::object();
  for (std::size_t v = 0; v < inst.b.size(); ++v) b[inst.names[v]] = inst.b[v];
  nlohmann::json gadgets = nlohmann::json::array();
  for (int u = 0; u < inst.h.vertex_count(); ++u)
    gadgets.push_back({{"kind", inst.h.kinds[static_cast<std::size_t>(u)] == NCLGraph::Kind::And ? "AND" : "OR"},
                       {"edges", inst.gadget_edges[static_cast<std::size_t>(u)]}});
  nlohmann::json edge_gadgets = nlohmann::json::array();
  for (const auto& pair : inst.edge_gadget) edge_gadgets.push_back({pair[0], pair[1]});
  std::vector<std::string> leaves;
  for (VertexId v : inst.leaves) leaves.push_back(inst.names[static_cast<std::size_t>(v)]);
  return {{"reduction", "ncl"},          {"vertex_names", vertices},          {"b", b},
          {"leaves", leaves},            {"connector_edges", inst.connector_edges},
          {"pendant_edges", inst.pendant_edges}, {"vertex_gadgets", gadgets}, {"edge_gadgets", edge_gadgets}};
}

nlohmann::json ham_provenance(const HamInstance& inst) {
  return {{"reduction", "hampath"},
          {"s", inst.s},
          {"t", inst.t},
          {"n_prime", inst.n_prime},
          {"t1", inst.t1},
          {"t2", inst.t2},
          {"t3", inst.t3},
          {"x", inst.x},
          {"y", inst.y},
          {"z", inst.z},
          {"diamond_edges", inst.diamond_edges()},
          {"px", inst.px},
          {"py", inst.py},
          {"pz", inst.pz},
          {"forest", inst.forest}};
}

}  // namespace rst
