#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sierp/graph.hpp"
#include "sierp/perm_group.hpp"
#include "sierp/permutation.hpp"
#include "sierp/product.hpp"

namespace sierp {

/// G ⊗_f H together with its factors, so lifts can be assembled from factor
/// permutations without searching.
struct BinaryProduct {
  Graph g;
  Graph h;
  VertexMap f;
  ProductResult product;

  static BinaryProduct make(Graph g, Graph h, VertexMap f, const std::string& separator = ".");
};

/// α ∈ Aut(G) and one β_g ∈ Aut(H) per vertex of G.
struct LiftSpec {
  Permutation alpha;
  std::vector<Permutation> betas;

  static LiftSpec constant(const Permutation& alpha, const Permutation& beta, int order_g);
};

/// p is an automorphism of the product that sends inner edges to inner edges
/// and connecting edges to connecting edges. Errc::NotAutomorphism when p is
/// not an automorphism.
bool respects_partition(const Permutation& p, const ProductResult& product);

/// (g, h) -> (α(g), β_g(h)). Always a bijection, never validated.
Permutation raw_psi(const BinaryProduct& bp, const LiftSpec& spec);

/// f ∘ α = β_g ∘ f on N(g) for every g.
bool psi_condition(const BinaryProduct& bp, const LiftSpec& spec);

/// The lift when psi_condition holds, nullopt otherwise. Throws
/// Errc::NotAutomorphism when α ∉ Aut(G) or some β_g ∉ Aut(H), and
/// Errc::ArityMismatch when the family has the wrong length.
std::optional<Permutation> make_psi(const BinaryProduct& bp, const LiftSpec& spec);

/// Acts as β on copy gH and fixes everything else; nullopt unless β fixes
/// f(N(g)) pointwise. Throws Errc::NotAutomorphism for β ∉ Aut(H) and
/// Errc::UnknownLabel for g outside G.
std::optional<Permutation> make_phi(const BinaryProduct& bp, Vertex g, const Permutation& beta);

/// Elements of `group` fixing every point of `points`.
PermGroup pointwise_stabilizer(const PermGroup& group, const std::vector<Vertex>& points);

/// ∏_g |Aut(H)_{f(N(g))}|, computed from the factors only.
std::uint64_t hat_b_predicted_order(const BinaryProduct& bp, const SearchLimits& limits = {});

/// Group generated by all valid Φ(g, β). Throws Errc::Overflow when the
/// predicted order exceeds limits.max_group_order, and std::logic_error if
/// the generated order differs from the predicted product of stabilizers.
PermGroup hat_b(const BinaryProduct& bp, const SearchLimits& limits = {});

/// Ψ(α, f∘α∘f⁻¹) as a raw bijection. Requires a bijective f.
Permutation diagonal_lift(const BinaryProduct& bp, const Permutation& alpha);

/// Diagonal lifts of Aut(G) that are automorphisms of the product.
/// Errc::NotBijective unless f is a bijection V(G) -> V(H).
PermGroup bar_a(const BinaryProduct& bp, const SearchLimits& limits = {});

/// Induced permutation of the copies. Errc::NotInTilde when p does not send
/// copies onto copies or does not respect the edge partition.
Permutation project(const Permutation& p, const BinaryProduct& bp);

struct PartitionedAut {
  PermGroup full;
  PermGroup tilde;
  PermGroup hat_b;
  std::optional<PermGroup> bar_a;  // only when f is bijective
};

/// Full automorphism group of the product split by the edge partition.
PartitionedAut tilde_a(const BinaryProduct& bp, const SearchLimits& limits = {});

/// Some automorphism of the product that breaks the edge partition, if any.
std::optional<Permutation> partition_breaking_automorphism(const PartitionedAut& groups);

struct DecompositionReport {
  std::size_t full_order = 0;
  std::size_t tilde_order = 0;
  std::size_t bar_a_order = 0;
  std::size_t hat_b_order = 0;
  std::size_t aut_g_order = 0;
  bool bar_a_matches_aut_g = false;   // |Ā| = |Aut(G)|
  bool hat_b_normal = false;          // B̂ ⊴ Ã
  bool trivial_intersection = false;  // Ā ∩ B̂ = 1
  bool orders_multiply = false;       // |Ā|·|B̂| = |Ã|
  bool every_element_factors = false; // each γ ∈ Ã is ᾱ·b with b ∈ B̂
  bool semidirect = false;
  bool tilde_is_full = false;

  bool passed() const {
    return bar_a_matches_aut_g && hat_b_normal && trivial_intersection && orders_multiply && every_element_factors &&
           semidirect;
  }
};

/// Builds G ⊗_f G and checks Ã = Ā ⋉ B̂ element by element. Errc::NotAutomorphism
/// unless f ∈ Aut(G); Errc::Disconnected unless G is connected.
DecompositionReport verify_decomposition(const Graph& g, const VertexMap& f, const SearchLimits& limits = {});

}  // namespace sierp
