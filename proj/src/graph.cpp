#include "rst/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rst {

Graph::Graph(int vertex_count, std::vector<std::pair<VertexId, VertexId>> const& edges)
    : n_(vertex_count), adjacency_(static_cast<std::size_t>(std::max(vertex_count, 0))) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(a) + " " +
                                  std::to_string(b));
    }
    if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    if (find_edge(a, b)) {
      throw std::invalid_argument("parallel edge " + std::to_string(a) + " " + std::to_string(b));
    }
    edges_.push_back({a, b});
    EdgeId id = static_cast<EdgeId>(edges_.size());
    adjacency_[static_cast<std::size_t>(a)].push_back({b, id});
    adjacency_[static_cast<std::size_t>(b)].push_back({a, id});
  }
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (!valid_vertex(a) || !valid_vertex(b)) return std::nullopt;
  const auto& lst = adjacency_[static_cast<std::size_t>(a)];
  const auto& other = adjacency_[static_cast<std::size_t>(b)];
  if (other.size() < lst.size()) {
    for (const auto& inc : other)
      if (inc.neighbor == a) return inc.edge;
    return std::nullopt;
  }
  for (const auto& inc : lst)
    if (inc.neighbor == b) return inc.edge;
  return std::nullopt;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const auto& inc : incident(v)) {
      if (!seen[static_cast<std::size_t>(inc.neighbor)]) {
        seen[static_cast<std::size_t>(inc.neighbor)] = 1;
        ++count;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return count == n_;
}

std::string to_string(const Point& p) {
  return (p.is_vertex() ? "v" : "e") + std::to_string(p.id);
}

Point parse_point(const std::string& text) {
  if (text.size() < 2 || (text[0] != 'v' && text[0] != 'e'))
    throw std::invalid_argument("bad point: " + text);
  std::size_t used = 0;
  int id = std::stoi(text.substr(1), &used);
  if (used != text.size() - 1) throw std::invalid_argument("bad point: " + text);
  return text[0] == 'v' ? Point::vertex(id) : Point::mid(id);
}

EdgeSet make_edge_set(std::vector<EdgeId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool edge_set_contains(const EdgeSet& s, EdgeId e) {
  return std::binary_search(s.begin(), s.end(), e);
}

EdgeSet edge_set_difference(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeSet edge_set_union(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeSet edge_set_intersection(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> degrees_of(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e : edges) {
    ++deg[static_cast<std::size_t>(g.edge(e).u)];
    ++deg[static_cast<std::size_t>(g.edge(e).v)];
  }
  return deg;
}

UnionFind::UnionFind(int n)
    : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int x) {
  while (parent_[static_cast<std::size_t>(x)] != x) {
    auto& p = parent_[static_cast<std::size_t>(x)];
    p = parent_[static_cast<std::size_t>(p)];
    x = p;
  }
  return x;
}

bool UnionFind::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[static_cast<std::size_t>(a)] < rank_[static_cast<std::size_t>(b)]) std::swap(a, b);
  parent_[static_cast<std::size_t>(b)] = a;
  if (rank_[static_cast<std::size_t>(a)] == rank_[static_cast<std::size_t>(b)])
    ++rank_[static_cast<std::size_t>(a)];
  return true;
}

}  // namespace rst
