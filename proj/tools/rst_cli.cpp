// rst: decide, construct and check spanning tree flip sequences.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "rst/degree.hpp"
#include "rst/diameter.hpp"
#include "rst/hampath.hpp"
#include "rst/io.hpp"
#include "rst/ncl.hpp"
#include "rst/oracle.hpp"

using namespace rst;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InstanceArgs {
  std::string graph;
  std::string from;
  std::string to;
  std::string constraint = "none";
  int d = 0;
  int jobs = 1;
  bool relaxed = false;
};

void add_instance_flags(CLI::App* cmd, InstanceArgs& a, bool need_to = true) {
  cmd->add_option("--graph", a.graph, "graph file (n m, then u v per edge)")->required();
  cmd->add_option("--from", a.from, "initial tree (edge ids)")->required();
  auto* to = cmd->add_option("--to", a.to, "target tree (edge ids)");
  if (need_to) to->required();
  cmd->add_option("--constraint", a.constraint, "none, max-deg-ge, max-deg-le, diam-le, diam-ge");
  cmd->add_option("--d", a.d, "bound");
  cmd->add_option("--jobs", a.jobs, "worker threads for auxiliary graphs")->check(CLI::PositiveNumber);
}

Constraint parse_constraint(const InstanceArgs& a) {
  auto kind = parse_constraint_kind(a.constraint);
  if (!kind) throw UsageError("unknown constraint: " + a.constraint);
  return Constraint{*kind, a.d};
}

struct Loaded {
  Graph g;
  Constraint c;
  std::optional<SpanningTree> ini;
  std::optional<SpanningTree> tar;
};

// Graph and trees live in one object so the trees' host pointer stays valid.
std::unique_ptr<Loaded> load(const InstanceArgs& a, bool check_trees = true) {
  auto out = std::make_unique<Loaded>();
  out->g = load_graph(a.graph);
  out->c = parse_constraint(a);
  if (!out->g.is_connected()) throw UsageError("graph is not connected");
  out->ini = load_tree(out->g, a.from);
  if (!a.to.empty()) out->tar = load_tree(out->g, a.to);
  for (const auto* t : {&out->ini, &out->tar})
    if (check_trees && *t && !out->c.satisfied_by(out->g, (*t)->edges()))
      throw UsageError("a tree violates " + out->c.to_string());
  return out;
}

// Decision with an optional sequence, dispatched by constraint kind.
std::pair<bool, std::optional<ReconfSequence>> solve(const Loaded& in, const InstanceArgs& a, bool want_sequence) {
  const Graph& g = in.g;
  const SpanningTree& s = *in.ini;
  const SpanningTree& t = *in.tar;
  switch (in.c.kind) {
    case Constraint::Kind::None:
      return {true, want_sequence ? std::optional(unconstrained_sequence(s, t)) : std::nullopt};
    case Constraint::Kind::MaxDegGe: {
      LargeDegreeSolver solver(g, in.c.d, a.jobs);
      if (!want_sequence) return {solver.decide(s, t), std::nullopt};
      auto seq = solver.sequence(s, t);
      return {seq.has_value(), seq};
    }
    case Constraint::Kind::DiamLe: {
      GoodTripleSearch search(g);
      std::optional<CenterPairTable> table;
      if (a.jobs > 1) table.emplace(search, in.c.d, a.jobs);
      SmallDiameterSolver solver = table ? SmallDiameterSolver(*table, in.c.d) : SmallDiameterSolver(search, in.c.d);
      if (!want_sequence) return {solver.decide(s, t), std::nullopt};
      auto seq = solver.sequence(s, t);
      return {seq.has_value(), seq};
    }
    case Constraint::Kind::MaxDegLe:
      if (!a.relaxed)
        throw UsageError("max-deg-le is PSPACE-complete in general; pass --relaxed when one tree has max degree <= d-1, "
                         "or use `rst oracle decide` on small inputs");
      if (!relaxed_precondition(in.c.d, s, t))
        throw UsageError("--relaxed needs both trees at max degree <= d and one at <= d-1");
      return {true, want_sequence ? std::optional(relaxed_small_degree_sequence(g, in.c.d, s, t)) : std::nullopt};
    case Constraint::Kind::DiamGe:
      throw UsageError("diam-ge is NP-hard; use `rst oracle decide` on small inputs");
  }
  throw UsageError("unsupported constraint");
}

void write_json(const std::string& path, const nlohmann::json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("cannot write " + path);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning tree reconfiguration under degree and diameter constraints"};
  app.require_subcommand(1);

  InstanceArgs dec, seq, ver, orc;
  std::string seq_out, ver_seq, orc_out;
  std::size_t cap = kDefaultTreeCap;

  auto* decide = app.add_subcommand("decide", "decide reachability (YES exit 0, NO exit 1)");
  add_instance_flags(decide, dec);
  decide->add_flag("--relaxed", dec.relaxed, "max-deg-le with one tree at max degree <= d-1");

  auto* sequence = app.add_subcommand("sequence", "write a flip sequence as JSON");
  add_instance_flags(sequence, seq);
  sequence->add_flag("--relaxed", seq.relaxed, "max-deg-le with one tree at max degree <= d-1");
  sequence->add_option("--out", seq_out, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "check a sequence file against an instance");
  add_instance_flags(verify, ver, false);
  verify->add_option("--seq", ver_seq, "sequence JSON")->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force flip graph search for small inputs");
  oracle->require_subcommand(1);
  auto* oracle_decide_cmd = oracle->add_subcommand("decide", "decide by breadth-first search");
  add_instance_flags(oracle_decide_cmd, orc);
  oracle_decide_cmd->add_option("--cap", cap, "maximum number of spanning trees");
  oracle_decide_cmd->add_option("--out", orc_out, "write a shortest sequence here");

  std::string ncl_path, ini_path, tar_path, gen_out;
  int gen_d = 3;
  auto* gen_ncl = app.add_subcommand("gen-ncl", "reduce an NCL instance to max-deg-le");
  gen_ncl->add_option("--ncl", ncl_path, "NCL graph file")->required();
  gen_ncl->add_option("--ini", ini_path, "initial orientation")->required();
  gen_ncl->add_option("--tar", tar_path, "target orientation")->required();
  gen_ncl->add_option("--d", gen_d, "degree bound (>= 3)");
  gen_ncl->add_option("--out", gen_out, "output directory")->required();

  std::string ham_graph;
  int ham_s = 0, ham_t = 1;
  auto* gen_ham = app.add_subcommand("gen-ham", "reduce Hamiltonian s-t path to diam-ge");
  gen_ham->add_option("--graph", ham_graph, "graph file")->required();
  gen_ham->add_option("--s", ham_s, "path start")->required();
  gen_ham->add_option("--t", ham_t, "path end")->required();
  gen_ham->add_option("--out", gen_out, "output directory")->required();

  std::string aux_graph, aux_constraint = "diam-le", aux_dot, aux_json;
  int aux_d = 0, aux_jobs = 1;
  auto* auxgraph = app.add_subcommand("auxgraph", "export the hub or center graph");
  auxgraph->add_option("--graph", aux_graph, "graph file")->required();
  auxgraph->add_option("--constraint", aux_constraint, "max-deg-ge or diam-le");
  auxgraph->add_option("--d", aux_d, "bound")->required();
  auxgraph->add_option("--dot", aux_dot, "DOT output path");
  auxgraph->add_option("--json", aux_json, "JSON output path (center graph only)");
  auxgraph->add_option("--jobs", aux_jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*decide) {
      auto in = load(dec);
      bool yes = solve(*in, dec, false).first;
      std::cout << (yes ? "YES" : "NO") << '\n';
      return yes ? kYes : kNo;
    }
    if (*sequence) {
      auto in = load(seq);
      auto [yes, s] = solve(*in, seq, true);
      if (!yes) {
        std::cout << "NO\n";
        return kNo;
      }
      write_json(seq_out, sequence_to_json(*s));
      return kYes;
    }
    if (*verify) {
      auto in = load(ver, false);
      std::ifstream file(ver_seq);
      if (!file) throw UsageError("cannot open " + ver_seq);
      ReconfSequence s = sequence_from_json(*in->ini, in->c, nlohmann::json::parse(file));
      auto check = validate_sequence(in->g, s);
      if (!check.ok) {
        std::cout << "INVALID at " << check.index << ": " << check.reason << '\n';
        return kNo;
      }
      if (in->tar && !(s.back() == *in->tar)) {
        std::cout << "INVALID: sequence does not end at the target tree\n";
        return kNo;
      }
      std::cout << "OK " << s.length() << " steps\n";
      return kYes;
    }
    if (*oracle_decide_cmd) {
      auto in = load(orc);
      auto ans = oracle_decide(in->g, in->c, *in->ini, *in->tar, cap);
      if (ans.reachable && !orc_out.empty()) write_json(orc_out, sequence_to_json(*ans.sequence));
      std::cout << (ans.reachable ? "YES" : "NO") << '\n';
      return ans.reachable ? kYes : kNo;
    }
    if (*gen_ncl) {
      NCLGraph h = load_ncl(ncl_path);
      auto s_ini = load_orientation(h, ini_path);
      auto s_tar = load_orientation(h, tar_path);
      if (!validate_ncl(h, s_ini) || !validate_ncl(h, s_tar)) throw UsageError("orientation is not a valid configuration");
      NCLInstance inst = ncl_to_rst(h, gen_d, s_ini, s_tar);
      write_bundle(gen_out, *inst.graph, *inst.t_ini, *inst.t_tar, Constraint::max_deg_le(gen_d), ncl_provenance(inst));
      std::cout << "wrote " << gen_out << " (" << inst.graph->vertex_count() << " vertices, "
                << inst.graph->edge_count() << " edges)\n";
      return kYes;
    }
    if (*gen_ham) {
      Graph gp = load_graph(ham_graph);
      HamInstance inst = hampath_to_rst(gp, ham_s, ham_t);
      write_bundle(gen_out, *inst.graph, *inst.t_ini, *inst.t_tar, Constraint::diam_ge(inst.d), ham_provenance(inst));
      std::cout << "wrote " << gen_out << " (" << inst.graph->vertex_count() << " vertices, d = " << inst.d << ")\n";
      return kYes;
    }
    if (*auxgraph) {
      Graph g = load_graph(aux_graph);
      if (!g.is_connected()) throw UsageError("graph is not connected");
      if (aux_constraint == "max-deg-ge") {
        auto aux = build_degree_aux_graph(g, aux_d, aux_jobs);
        std::string dot = degree_aux_dot(aux);
        if (aux_dot.empty()) std::cout << dot;
        else write_text(aux_dot, dot);
      } else if (aux_constraint == "diam-le") {
        auto aux = build_center_aux_graph(g, aux_d, aux_jobs);
        std::string dot = center_aux_dot(g, aux);
        if (!aux_json.empty()) write_json(aux_json, center_aux_json(g, aux));
        if (aux_dot.empty() && aux_json.empty()) std::cout << dot;
        else if (!aux_dot.empty()) write_text(aux_dot, dot);
      } else {
        throw UsageError("auxgraph supports max-deg-ge and diam-le");
      }
      return kYes;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
