#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sierp/graph.hpp"
#include "sierp/planarity.hpp"
#include "sierp/product.hpp"

namespace sierp {

/// H + g: H plus a new vertex adjacent to f(N(g)) (repeated images collapse).
/// The new vertex is labelled "<g>_H", primed until unique, and is the last index.
Graph apex_extension(const Graph& h, const Graph& g, const VertexMap& f, Vertex gv);

struct ProductPlanarityReport {
  /// Ground truth: planarity of the constructed product.
  PlanarityVerdict verdict;
  /// Necessary condition: G is planar.
  bool g_planar = false;
  /// Necessary condition: H + g is planar, per vertex g of G.
  std::vector<bool> apex_planar;
  /// G = H (same labels and edges) with f the identity.
  bool self_product_identity = false;
  /// Prediction for the self-product: G outerplanar or G ≅ K4.
  std::optional<bool> self_product_prediction;
  /// G planar, Δ(G) ≤ 3 and H outerplanar: the product must be planar.
  bool low_degree_sufficient = false;
  /// Every evaluated condition agrees with the verdict.
  bool consistent = false;

  bool all_apex_planar() const;
};

/// Decides planarity of G ⊗_f H directly and evaluates the factor conditions
/// against it. Throws Errc::Disconnected unless both factors are connected.
ProductPlanarityReport product_planarity(const Graph& g, const Graph& h, const VertexMap& f);

struct EmbeddingConditionResult {
  /// Some planar embedding of G admits, for every g, a planar embedding of
  /// H + g whose rotation at the new vertex is the reverse of g's rotation.
  bool holds = false;
  /// Same search with the rotation at the new vertex taken unreversed.
  bool holds_unreversed = false;
  std::uint64_t g_embeddings_tried = 0;
};

/// Exhaustive search over combinatorial embeddings. H + g is built with one
/// edge per neighbor of g (parallel edges kept) so the rotation at the new
/// vertex lines up with the rotation at g. Throws Errc::Overflow when G or
/// some H + g has more than `vertex_limit` vertices, or when an enumeration
/// would exceed `rotation_limit` rotation systems.
EmbeddingConditionResult embedding_condition_check(const Graph& g, const Graph& h, const VertexMap& f,
                                                   int vertex_limit = 10,
                                                   std::uint64_t rotation_limit = 5'000'000);

/// γ(G) + |G|·γ(H), a lower bound on the genus of any G ⊗_f H.
std::int64_t genus_lower_bound(std::int64_t genus_g, std::int64_t order_g, std::int64_t genus_h);

/// a_1 = d_1, a_k = (d_k + 1) a_{k-1} + d_k.
std::int64_t diameter_bound_recursive(const std::vector<std::int64_t>& diameters);
/// Sum over nonempty index subsets of the product of the chosen diameters.
/// Limited to 30 factors (Errc::Overflow beyond that).
std::int64_t diameter_bound_closed_form(const std::vector<std::int64_t>& diameters);

/// Upper bound on the diameter of a chain product from per-factor diameters,
/// listed innermost first (d_1 = diam G_1). Evaluates both forms and throws
/// std::logic_error if they disagree; Errc::InvalidArgument for an empty list.
std::int64_t diameter_bound(const std::vector<std::int64_t>& diameters);

struct ConnectingEdgeCycle {
  Edge product_edge;
  Edge factor_edge;
  /// Shortest cycle through the factor edge in G (nullopt: bridge).
  std::optional<int> factor_cycle;
  /// Shortest cycle through the connecting edge in the product.
  std::optional<int> product_cycle;
  bool holds = false;
};

struct ConnectingEdgeCycleReport {
  bool locally_injective = false;
  std::vector<ConnectingEdgeCycle> edges;
  bool all_hold = false;
};

/// For every connecting edge: no cycle when its factor edge is a bridge,
/// otherwise at least c (2c when f is locally injective), c being the
/// shortest cycle through the factor edge.
ConnectingEdgeCycleReport connecting_edge_cycle_check(const Graph& g, const Graph& h, const VertexMap& f,
                                                      const ProductResult& product);

}  // namespace sierp
