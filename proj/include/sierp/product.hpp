#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sierp/graph.hpp"

namespace sierp {

/// Total function from the vertices of a source graph to the vertices of a
/// target graph, stored by index. Construction validates totality against
/// both graphs; the graphs themselves are not retained.
class VertexMap {
 public:
  VertexMap() = default;

  /// Throws Errc::ArityMismatch when `table` has the wrong length or an
  /// image is out of range.
  VertexMap(const Graph& source, const Graph& target, std::vector<Vertex> table);

  /// g -> vertex of `target` with the same label. Errc::UnknownLabel if some
  /// source label is missing from the target.
  static VertexMap identity(const Graph& source, const Graph& target);

  /// Index i -> index (i mod k) of the target, k = target.order() by default.
  static VertexMap modulo(const Graph& source, const Graph& target, int k = 0);

  /// From (source label, target label) pairs; every source vertex exactly once.
  static VertexMap from_pairs(const Graph& source, const Graph& target,
                              const std::vector<std::pair<std::string, std::string>>& pairs);

  int source_order() const noexcept { return static_cast<int>(table_.size()); }
  int target_order() const noexcept { return target_order_; }
  Vertex operator()(Vertex g) const { return table_[static_cast<std::size_t>(g)]; }
  const std::vector<Vertex>& table() const noexcept { return table_; }

  bool is_bijective() const;

 private:
  std::vector<Vertex> table_;
  int target_order_ = 0;
};

/// Map file: "g h" lines with '#' comments, covering every source vertex
/// exactly once. Throws Errc::Malformed / Errc::UnknownLabel /
/// Errc::ArityMismatch.
VertexMap parse_vertex_map(std::string_view text, const Graph& source, const Graph& target);
std::string emit_vertex_map(const VertexMap& f, const Graph& source, const Graph& target);

/// Distinct neighbors of every vertex have distinct images.
bool is_locally_injective(const Graph& source, const VertexMap& f);

enum class EdgeClass { Inner, Connecting };

/// A Sierpiński product graph together with its embedding φ and the
/// partition of its edges into inner and connecting edges.
struct ProductResult {
  Graph graph;
  /// coords[v] = (g_m, ..., g_1): factor indices of product vertex v, outermost first.
  std::vector<std::vector<Vertex>> coords;
  /// phi[g] = product vertex (g, F(g)) for every vertex g of the outer factor.
  std::vector<Vertex> phi;
  std::vector<Edge> inner_edges;
  std::vector<Edge> connecting_edges;
  /// Order of the inner graph H (copy size).
  int copy_size = 0;
  std::string separator = ".";

  /// Index of the outer-factor vertex whose copy contains v.
  Vertex copy_of(Vertex v) const { return v / copy_size; }
  /// Position of v inside its copy (index into H).
  Vertex inner_of(Vertex v) const { return v % copy_size; }
  /// Product vertex (g, h).
  Vertex vertex(Vertex g, Vertex h) const { return g * copy_size + h; }
  int copies() const { return copy_size == 0 ? 0 : graph.order() / copy_size; }

  /// Errc::UnknownEdge when e is not an edge of the product.
  EdgeClass classify(Edge e) const;
  EdgeClass classify(std::string_view a, std::string_view b) const;
};

/// G ⊗_f H: vertices (g, h) labelled label(g) + separator + label(h), indexed
/// g * |H| + h. Inner edges {(g,h),(g,h')} for hh' in E(H); one connecting edge
/// {(g, f(g')), (g', f(g))} per edge gg' of G.
ProductResult sierpinski_product(const Graph& g, const Graph& h, const VertexMap& f, const std::string& separator = ".");

/// G_m ⊗_{f_{m-1}} ... ⊗_{f_1} G_1, listed outermost first.
struct ChainSpec {
  std::vector<Graph> factors;  // G_m, ..., G_1
  std::vector<VertexMap> maps;  // f_{m-1}: V(G_m) -> V(G_{m-1}), ..., f_1: V(G_2) -> V(G_1)
  std::string separator = ".";
};

/// Left-nested chain: K = G_1, then K <- G_{l} ⊗_{φ∘f_{l-1}} K for l = 2..m,
/// where φ is the embedding of the previous step. Throws Errc::ArityMismatch
/// when the maps do not fit the factors, Errc::InvalidArgument when m = 0.
ProductResult chain_product(const ChainSpec& spec);

/// S_G^n: n copies of G chained with identity maps.
ProductResult generalized_sierpinski(const Graph& g, int n, const std::string& separator = ".");

struct Counts {
  std::uint64_t order = 0;
  std::uint64_t size = 0;
  friend bool operator==(const Counts&, const Counts&) = default;
};

/// Closed-form order and size without building the graph.
/// Throws Errc::Overflow if a count does not fit 64 bits.
Counts predicted_counts(const ChainSpec& spec);
Counts predicted_counts(const Graph& g, const Graph& h);

}  // namespace sierp
