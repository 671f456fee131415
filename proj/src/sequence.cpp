#include "rst/sequence.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "rst/distances.hpp"

namespace rst {

namespace {

bool spans_as_tree(const Graph& g, const std::vector<EdgeId>& edges) {
  if (static_cast<int>(edges.size()) != std::max(g.vertex_count() - 1, 0)) return false;
  UnionFind uf(g.vertex_count());
  for (EdgeId e : edges) {
    if (!g.valid_edge(e)) return false;
    if (!uf.unite(g.edge(e).u, g.edge(e).v)) return false;
  }
  return true;
}

}  // namespace

bool validate_spanning_tree(const Graph& g, const std::vector<EdgeId>& edges) {
  return spans_as_tree(g, edges);
}

bool is_pseudotree(const Graph& g, const std::vector<EdgeId>& edges) {
  int n = g.vertex_count();
  int m = static_cast<int>(edges.size());
  if (m != n - 1 && m != n) return false;
  EdgeSet s = make_edge_set(edges);
  if (static_cast<int>(s.size()) != m) return false;
  UnionFind uf(n);
  int merged = 0;
  for (EdgeId e : s) {
    if (!g.valid_edge(e)) return false;
    if (uf.unite(g.edge(e).u, g.edge(e).v)) ++merged;
  }
  return merged == n - 1;
}

SpanningTree::SpanningTree(const Graph& g, std::vector<EdgeId> edges) : g_(&g) {
  if (!spans_as_tree(g, edges)) throw std::invalid_argument("edge set is not a spanning tree");
  edges_ = make_edge_set(std::move(edges));
}

std::optional<SpanningTree> SpanningTree::make(const Graph& g, std::vector<EdgeId> edges) {
  if (!spans_as_tree(g, edges)) return std::nullopt;
  return SpanningTree(Trusted{}, g, make_edge_set(std::move(edges)));
}

int SpanningTree::max_degree() const {
  auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

Pseudotree::Pseudotree(const Graph& g, std::vector<EdgeId> edges) : g_(&g) {
  if (!is_pseudotree(g, edges)) throw std::invalid_argument("edge set is not a pseudotree");
  edges_ = make_edge_set(std::move(edges));
}

std::optional<Pseudotree> Pseudotree::make(const Graph& g, std::vector<EdgeId> edges) {
  if (!is_pseudotree(g, edges)) return std::nullopt;
  return Pseudotree(g, std::move(edges));
}

bool are_flip_adjacent(const SpanningTree& t1, const SpanningTree& t2) {
  if (&t1.host() != &t2.host()) throw std::invalid_argument("trees belong to different graphs");
  return edge_set_difference(t1.edges(), t2.edges()).size() <= 1;
}

SpanningTree apply_flip(const SpanningTree& t, EdgeId remove, EdgeId add) {
  if (!t.contains(remove)) throw std::invalid_argument("removed edge " + std::to_string(remove) + " not in tree");
  if (!t.host().valid_edge(add) || t.contains(add))
    throw std::invalid_argument("added edge " + std::to_string(add) + " invalid or already in tree");
  std::vector<EdgeId> next;
  next.reserve(t.edges().size());
  for (EdgeId e : t.edges())
    if (e != remove) next.push_back(e);
  next.push_back(add);
  auto out = SpanningTree::make(t.host(), std::move(next));
  if (!out) throw std::invalid_argument("flip does not yield a spanning tree");
  return *out;
}

int tree_diameter(const Graph& g, const EdgeSet& tree) {
  int n = g.vertex_count();
  if (n <= 1) return 0;
  std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
  for (EdgeId e : tree) {
    adj[static_cast<std::size_t>(g.edge(e).u)].push_back(g.edge(e).v);
    adj[static_cast<std::size_t>(g.edge(e).v)].push_back(g.edge(e).u);
  }
  auto far = [&](VertexId s, int& reached) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::queue<VertexId> q;
    q.push(s);
    dist[static_cast<std::size_t>(s)] = 0;
    VertexId last = s;
    reached = 0;
    while (!q.empty()) {
      last = q.front();
      q.pop();
      ++reached;
      for (VertexId w : adj[static_cast<std::size_t>(last)]) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(last)] + 1;
          q.push(w);
        }
      }
    }
    return std::pair{last, dist[static_cast<std::size_t>(last)]};
  };
  int reached = 0;
  auto [a, da] = far(0, reached);
  if (reached != n) return -1;
  auto [b, db] = far(a, reached);
  (void)b;
  (void)da;
  return db;
}

bool Constraint::satisfied_by(const Graph& g, const EdgeSet& tree) const {
  switch (kind) {
    case Kind::None:
      return true;
    case Kind::MaxDegLe:
    case Kind::MaxDegGe: {
      auto deg = degrees_of(g, tree);
      int mx = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
      return kind == Kind::MaxDegLe ? mx <= d : mx >= d;
    }
    case Kind::DiamLe:
      return tree_diameter(g, tree) <= d;
    case Kind::DiamGe:
      return tree_diameter(g, tree) >= d;
  }
  return false;
}

std::optional<Constraint::Kind> parse_constraint_kind(const std::string& text) {
  if (text == "none") return Constraint::Kind::None;
  if (text == "max-deg-le") return Constraint::Kind::MaxDegLe;
  if (text == "max-deg-ge") return Constraint::Kind::MaxDegGe;
  if (text == "diam-le") return Constraint::Kind::DiamLe;
  if (text == "diam-ge") return Constraint::Kind::DiamGe;
  return std::nullopt;
}

std::string constraint_kind_name(Constraint::Kind kind) {
  switch (kind) {
    case Constraint::Kind::None: return "none";
    case Constraint::Kind::MaxDegLe: return "max-deg-le";
    case Constraint::Kind::MaxDegGe: return "max-deg-ge";
    case Constraint::Kind::DiamLe: return "diam-le";
    case Constraint::Kind::DiamGe: return "diam-ge";
  }
  return "none";
}

std::string Constraint::to_string() const {
  if (kind == Kind::None) return "none";
  return constraint_kind_name(kind) + " " + std::to_string(d);
}

void ReconfSequence::push(EdgeId remove, EdgeId add) {
  trees.push_back(apply_flip(trees.back(), remove, add));
  steps.push_back({remove, add});
}

void ReconfSequence::append(const ReconfSequence& tail) {
  if (!(tail.front() == back())) throw std::invalid_argument("sequence does not continue from the last tree");
  trees.insert(trees.end(), tail.trees.begin() + 1, tail.trees.end());
  steps.insert(steps.end(), tail.steps.begin(), tail.steps.end());
}

ReconfSequence ReconfSequence::reversed() const {
  ReconfSequence out(constraint, trees.back());
  out.trees.assign(trees.rbegin(), trees.rend());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) out.steps.push_back({it->added, it->removed});
  return out;
}

ReconfSequence unconstrained_sequence(const SpanningTree& t, const SpanningTree& t2, Constraint tag) {
  if (&t.host() != &t2.host()) throw std::invalid_argument("trees belong to different graphs");
  const Graph& g = t.host();
  ReconfSequence seq(tag, t);
  EdgeSet missing = edge_set_difference(t2.edges(), t.edges());
  for (EdgeId e : missing) {
    const SpanningTree& cur = seq.back();
    Subgraph sub(g, cur.edges());
    auto cycle = forest_path(sub, g.edge(e).u, g.edge(e).v);
    EdgeId drop = 0;
    for (EdgeId f : cycle)
      if (!t2.contains(f) && (drop == 0 || f < drop)) drop = f;
    seq.push(drop, e);
  }
  return seq;
}

SequenceCheck validate_sequence(const Graph& g, const ReconfSequence& seq) {
  if (seq.trees.empty()) return {false, 0, "empty sequence"};
  if (seq.steps.size() + 1 != seq.trees.size()) return {false, 0, "step count does not match tree count"};
  for (std::size_t i = 0; i < seq.trees.size(); ++i) {
    const auto& t = seq.trees[i];
    if (&t.host() != &g) return {false, i, "tree belongs to another graph"};
    if (!validate_spanning_tree(g, t.edges())) return {false, i, "not a spanning tree"};
    if (!seq.constraint.satisfied_by(g, t.edges()))
      return {false, i, "tree violates " + seq.constraint.to_string()};
    if (i == 0) continue;
    const auto& prev = seq.trees[i - 1];
    const auto& st = seq.steps[i - 1];
    if (!prev.contains(st.removed) || prev.contains(st.added) || !g.valid_edge(st.added))
      return {false, i - 1, "malformed flip"};
    std::vector<EdgeId> expect;
    for (EdgeId e : prev.edges())
      if (e != st.removed) expect.push_back(e);
    expect.push_back(st.added);
    if (make_edge_set(expect) != t.edges()) return {false, i - 1, "tree does not match recorded flip"};
  }
  return {};
}

}  // namespace rst
