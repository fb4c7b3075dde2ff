#include "sierp/symmetry.hpp"

#include <algorithm>
#include <stdexcept>

#include "sierp/automorphism.hpp"
#include "sierp/error.hpp"
#include "sierp/metrics.hpp"

namespace sierp {

BinaryProduct BinaryProduct::make(Graph g, Graph h, VertexMap f, const std::string& separator) {
  BinaryProduct bp{std::move(g), std::move(h), std::move(f), {}};
  bp.product = sierpinski_product(bp.g, bp.h, bp.f, separator);
  return bp;
}

LiftSpec LiftSpec::constant(const Permutation& alpha, const Permutation& beta, int order_g) {
  return LiftSpec{alpha, std::vector<Permutation>(static_cast<std::size_t>(order_g), beta)};
}

bool respects_partition(const Permutation& p, const ProductResult& product) {
  if (!is_automorphism(product.graph, p)) throw Error(Errc::NotAutomorphism, "permutation is not an automorphism of the product");
  for (const Edge& e : product.inner_edges)
    if (product.copy_of(p(e.u)) != product.copy_of(p(e.v))) return false;
  // Automorphisms are bijective on edges, so inner -> inner forces connecting -> connecting.
  return true;
}

namespace {

void check_spec(const BinaryProduct& bp, const LiftSpec& spec) {
  if (spec.alpha.degree() != bp.g.order() || static_cast<int>(spec.betas.size()) != bp.g.order())
    throw Error(Errc::ArityMismatch, "lift needs α on V(G) and one β per vertex of G");
  for (const auto& b : spec.betas)
    if (b.degree() != bp.h.order()) throw Error(Errc::ArityMismatch, "β must permute V(H)");
}

}  // namespace

Permutation raw_psi(const BinaryProduct& bp, const LiftSpec& spec) {
  check_spec(bp, spec);
  const auto& P = bp.product;
  std::vector<Vertex> images(static_cast<std::size_t>(P.graph.order()));
  for (Vertex g = 0; g < bp.g.order(); ++g)
    for (Vertex h = 0; h < bp.h.order(); ++h)
      images[static_cast<std::size_t>(P.vertex(g, h))] = P.vertex(spec.alpha(g), spec.betas[static_cast<std::size_t>(g)](h));
  return Permutation(std::move(images));
}

bool psi_condition(const BinaryProduct& bp, const LiftSpec& spec) {
  check_spec(bp, spec);
  for (Vertex g = 0; g < bp.g.order(); ++g)
    for (Vertex n : bp.g.neighbors(g))
      if (bp.f(spec.alpha(n)) != spec.betas[static_cast<std::size_t>(g)](bp.f(n))) return false;
  return true;
}

std::optional<Permutation> make_psi(const BinaryProduct& bp, const LiftSpec& spec) {
  check_spec(bp, spec);
  if (!is_automorphism(bp.g, spec.alpha)) throw Error(Errc::NotAutomorphism, "α is not an automorphism of G");
  for (const auto& b : spec.betas)
    if (!is_automorphism(bp.h, b)) throw Error(Errc::NotAutomorphism, "some β_g is not an automorphism of H");
  if (!psi_condition(bp, spec)) return std::nullopt;
  return raw_psi(bp, spec);
}

std::optional<Permutation> make_phi(const BinaryProduct& bp, Vertex g, const Permutation& beta) {
  if (g < 0 || g >= bp.g.order()) throw Error(Errc::UnknownLabel, "vertex index outside G");
  if (beta.degree() != bp.h.order() || !is_automorphism(bp.h, beta))
    throw Error(Errc::NotAutomorphism, "β is not an automorphism of H");
  for (Vertex n : bp.g.neighbors(g))
    if (beta(bp.f(n)) != bp.f(n)) return std::nullopt;
  const auto& P = bp.product;
  std::vector<Vertex> images(static_cast<std::size_t>(P.graph.order()));
  for (Vertex v = 0; v < P.graph.order(); ++v) images[static_cast<std::size_t>(v)] = v;
  for (Vertex h = 0; h < bp.h.order(); ++h) images[static_cast<std::size_t>(P.vertex(g, h))] = P.vertex(g, beta(h));
  return Permutation(std::move(images));
}

PermGroup pointwise_stabilizer(const PermGroup& group, const std::vector<Vertex>& points) {
  std::vector<Permutation> kept;
  for (const auto& p : group.elements())
    if (std::all_of(points.begin(), points.end(), [&](Vertex x) { return p(x) == x; })) kept.push_back(p);
  return PermGroup::from_elements(group.degree(), std::move(kept));
}

namespace {

std::vector<Vertex> images_of_neighbors(const BinaryProduct& bp, Vertex g) {
  std::vector<Vertex> pts;
  for (Vertex n : bp.g.neighbors(g)) pts.push_back(bp.f(n));
  return pts;
}

}  // namespace

std::uint64_t hat_b_predicted_order(const BinaryProduct& bp, const SearchLimits& limits) {
  const PermGroup aut_h = automorphisms(bp.h, limits);
  std::uint64_t order = 1;
  for (Vertex g = 0; g < bp.g.order(); ++g) {
    order *= pointwise_stabilizer(aut_h, images_of_neighbors(bp, g)).order();
    if (order > limits.max_group_order) return order;
  }
  return order;
}

PermGroup hat_b(const BinaryProduct& bp, const SearchLimits& limits) {
  const PermGroup aut_h = automorphisms(bp.h, limits);
  std::uint64_t predicted = 1;
  std::vector<Permutation> gens;
  for (Vertex g = 0; g < bp.g.order(); ++g) {
    const PermGroup stab = pointwise_stabilizer(aut_h, images_of_neighbors(bp, g));
    predicted *= stab.order();
    if (predicted > limits.max_group_order)
      throw Error(Errc::Overflow, "B̂ would exceed " + std::to_string(limits.max_group_order) + " elements");
    for (const auto& beta : stab.elements()) {
      if (beta.is_identity()) continue;
      auto phi = make_phi(bp, g, beta);
      if (!phi) throw std::logic_error("stabilizer element rejected by make_phi");
      gens.push_back(std::move(*phi));
    }
  }
  PermGroup group = group_closure(bp.product.graph.order(), gens, limits);
  if (group.order() != predicted)
    throw std::logic_error("B̂ has order " + std::to_string(group.order()) + ", expected " + std::to_string(predicted));
  return group;
}

Permutation diagonal_lift(const BinaryProduct& bp, const Permutation& alpha) {
  if (!bp.f.is_bijective()) throw Error(Errc::NotBijective, "diagonal lifts need a bijective f");
  // β = f ∘ α ∘ f⁻¹ on V(H).
  std::vector<Vertex> beta(static_cast<std::size_t>(bp.h.order()));
  for (Vertex g = 0; g < bp.g.order(); ++g) beta[static_cast<std::size_t>(bp.f(g))] = bp.f(alpha(g));
  return raw_psi(bp, LiftSpec::constant(alpha, Permutation(std::move(beta)), bp.g.order()));
}

PermGroup bar_a(const BinaryProduct& bp, const SearchLimits& limits) {
  if (!bp.f.is_bijective()) throw Error(Errc::NotBijective, "Ā is defined only for bijective f");
  const PermGroup aut_g = automorphisms(bp.g, limits);
  std::vector<Permutation> lifts;
  for (const auto& alpha : aut_g.elements()) {
    Permutation lift = diagonal_lift(bp, alpha);
    if (is_automorphism(bp.product.graph, lift)) lifts.push_back(std::move(lift));
  }
  // Diagonal lifts compose like their projections, so the valid ones form a group.
  return PermGroup::from_elements(bp.product.graph.order(), std::move(lifts));
}

Permutation project(const Permutation& p, const BinaryProduct& bp) {
  const auto& P = bp.product;
  if (p.degree() != P.graph.order()) throw Error(Errc::NotInTilde, "permutation degree does not match the product");
  std::vector<Vertex> images(static_cast<std::size_t>(bp.g.order()));
  for (Vertex g = 0; g < bp.g.order(); ++g) {
    const Vertex target = P.copy_of(p(P.vertex(g, 0)));
    for (Vertex h = 1; h < bp.h.order(); ++h)
      if (P.copy_of(p(P.vertex(g, h))) != target) throw Error(Errc::NotInTilde, "permutation splits a copy of H");
    images[static_cast<std::size_t>(g)] = target;
  }
  if (!is_automorphism(P.graph, p) || !respects_partition(p, P))
    throw Error(Errc::NotInTilde, "permutation does not respect the edge partition");
  Permutation gamma{std::move(images)};
  if (!is_automorphism(bp.g, gamma)) throw std::logic_error("projection of a partition-respecting automorphism is not in Aut(G)");
  return gamma;
}

PartitionedAut tilde_a(const BinaryProduct& bp, const SearchLimits& limits) {
  PermGroup full = automorphisms(bp.product.graph, limits);
  std::vector<Permutation> kept;
  for (const auto& p : full.elements())
    if (respects_partition(p, bp.product)) kept.push_back(p);
  PermGroup tilde = PermGroup::from_elements(full.degree(), std::move(kept));
  PermGroup hb = hat_b(bp, limits);
  std::optional<PermGroup> ba;
  if (bp.f.is_bijective()) ba = bar_a(bp, limits);
  return PartitionedAut{std::move(full), std::move(tilde), std::move(hb), std::move(ba)};
}

std::optional<Permutation> partition_breaking_automorphism(const PartitionedAut& groups) {
  for (const auto& p : groups.full.elements())
    if (!groups.tilde.contains(p)) return p;
  return std::nullopt;
}

DecompositionReport verify_decomposition(const Graph& g, const VertexMap& f, const SearchLimits& limits) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, "decomposition needs a connected graph");
  if (f.source_order() != g.order() || f.target_order() != g.order() || !f.is_bijective() ||
      !is_automorphism(g, Permutation(f.table())))
    throw Error(Errc::NotAutomorphism, "f must be an automorphism of G");

  const BinaryProduct bp = BinaryProduct::make(g, g, f);
  const PartitionedAut groups = tilde_a(bp, limits);
  const PermGroup aut_g = automorphisms(g, limits);
  const PermGroup& tilde = groups.tilde;
  const PermGroup& hb = groups.hat_b;
  const PermGroup& ba = *groups.bar_a;

  DecompositionReport r;
  r.full_order = groups.full.order();
  r.tilde_order = tilde.order();
  r.bar_a_order = ba.order();
  r.hat_b_order = hb.order();
  r.aut_g_order = aut_g.order();
  r.tilde_is_full = r.tilde_order == r.full_order;
  r.bar_a_matches_aut_g = ba.order() == aut_g.order();
  r.hat_b_normal = is_subgroup(hb, tilde) && is_normal(hb, tilde);
  r.trivial_intersection = intersection(ba, hb).is_trivial();
  r.orders_multiply = ba.order() * hb.order() == tilde.order();
  r.every_element_factors = std::all_of(tilde.elements().begin(), tilde.elements().end(), [&](const Permutation& gamma) {
    const Permutation diag = diagonal_lift(bp, project(gamma, bp));
    return ba.contains(diag) && hb.contains(diag.inverse() * gamma);
  });
  r.semidirect = is_subgroup(ba, tilde) && r.hat_b_normal && check_semidirect(tilde, hb, ba);
  return r;
}

}  // namespace sierp
