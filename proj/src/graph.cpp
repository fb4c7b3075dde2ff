#include "sierp/graph.hpp"

#include <algorithm>

#include "sierp/error.hpp"

namespace sierp {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::Loop: return "Loop";
    case Errc::Malformed: return "Malformed";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::UnknownEdge: return "UnknownEdge";
    case Errc::Overflow: return "Overflow";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::NotBijective: return "NotBijective";
    case Errc::NotInTilde: return "NotInTilde";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::Disconnected: return "Disconnected";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Graph::Graph(std::vector<std::string> labels, const std::vector<Edge>& edges) {
  labels_.reserve(labels.size());
  for (auto& l : labels) add_vertex(std::move(l));
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph Graph::with_indices(int n, const std::vector<Edge>& edges, bool one_based) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(one_based ? i + 1 : i));
  return Graph(std::move(labels), edges);
}

Vertex Graph::add_vertex(std::string label) {
  if (index_.count(label) != 0) throw Error(Errc::InvalidArgument, "duplicate vertex label '" + label + "'");
  const auto v = static_cast<Vertex>(labels_.size());
  index_.emplace(label, v);
  labels_.push_back(std::move(label));
  adj_.emplace_back();
  return v;
}

bool Graph::add_edge(Vertex a, Vertex b) {
  if (a < 0 || b < 0 || a >= order() || b >= order())
    throw Error(Errc::InvalidArgument, "edge endpoint out of range");
  if (a == b) throw Error(Errc::Loop, "loop at vertex '" + labels_[static_cast<std::size_t>(a)] + "'");
  auto& na = adj_[static_cast<std::size_t>(a)];
  auto it = std::lower_bound(na.begin(), na.end(), b);
  if (it != na.end() && *it == b) return false;
  na.insert(it, b);
  auto& nb = adj_[static_cast<std::size_t>(b)];
  nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
  ++edge_count_;
  return true;
}

bool Graph::add_edge(std::string_view a, std::string_view b) { return add_edge(index_of(a), index_of(b)); }

bool Graph::has_label(std::string_view label) const { return index_.count(std::string(label)) != 0; }

Vertex Graph::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) throw Error(Errc::UnknownLabel, "no vertex labelled '" + std::string(label) + "'");
  return it->second;
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (const auto& n : adj_) best = std::max(best, static_cast<int>(n.size()));
  return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= order() || b >= order()) return false;
  const auto& na = adj_[static_cast<std::size_t>(a)];
  return std::binary_search(na.begin(), na.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.labels_ == b.labels_ && a.adj_ == b.adj_;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  Graph out;
  for (Vertex v : vertices) pos[static_cast<std::size_t>(v)] = out.add_vertex(g.label(v));
  for (Vertex v : vertices)
    for (Vertex w : g.neighbors(v))
      if (pos[static_cast<std::size_t>(w)] >= 0 && v < w)
        out.add_edge(pos[static_cast<std::size_t>(v)], pos[static_cast<std::size_t>(w)]);
  return out;
}

Graph without_edge(const Graph& g, Edge e) {
  std::vector<Edge> edges = g.edges();
  std::erase(edges, e);
  return Graph(g.labels(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b, const std::string& suffix) {
  Graph out(a.labels(), a.edges());
  std::vector<Vertex> map;
  for (const auto& l : b.labels()) {
    std::string label = l;
    while (out.has_label(label)) label += suffix;
    map.push_back(out.add_vertex(label));
  }
  for (const Edge& e : b.edges()) out.add_edge(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]);
  return out;
}

}  // namespace sierp
