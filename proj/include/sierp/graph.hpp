#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sierp {

using Vertex = int;

// Undirected edge stored with first < second.
struct Edge {
  Vertex u;
  Vertex v;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    return std::hash<long long>{}((static_cast<long long>(e.u) << 32) ^ static_cast<unsigned>(e.v));
  }
};

/// Finite simple undirected graph whose vertices carry unique string labels.
///
/// Vertex identity is the label; indices are dense [0, order()) and follow
/// insertion order. Neighbor lists are kept sorted so iteration order is
/// deterministic.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `labels` with the given index edges. Throws on
  /// duplicate labels, loops or out-of-range endpoints; repeated edges collapse.
  Graph(std::vector<std::string> labels, const std::vector<Edge>& edges);

  /// Graph on labels "0".."n-1" (or "1".."n" when one_based) with the given edges.
  static Graph with_indices(int n, const std::vector<Edge>& edges, bool one_based = false);

  Vertex add_vertex(std::string label);
  /// Returns false when the edge already existed.
  bool add_edge(Vertex a, Vertex b);
  bool add_edge(std::string_view a, std::string_view b);

  int order() const noexcept { return static_cast<int>(labels_.size()); }
  int size() const noexcept { return edge_count_; }
  bool empty() const noexcept { return labels_.empty(); }

  const std::string& label(Vertex v) const { return labels_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool has_label(std::string_view label) const;
  /// Throws Errc::UnknownLabel.
  Vertex index_of(std::string_view label) const;

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const noexcept;
  bool has_edge(Vertex a, Vertex b) const;

  /// All edges sorted lexicographically by (u, v) with u < v.
  std::vector<Edge> edges() const;

  /// Same labels in the same order and the same edge set.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::vector<Vertex>> adj_;
  int edge_count_ = 0;
};

/// Subgraph induced by `vertices` (labels kept, order as given).
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

/// Graph minus one edge.
Graph without_edge(const Graph& g, Edge e);

/// Disjoint union; labels of `b` are suffixed with `suffix` when they clash.
Graph disjoint_union(const Graph& a, const Graph& b, const std::string& suffix = "'");

}  // namespace sierp
