#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sierp/graph.hpp"
#include "sierp/perm_group.hpp"

namespace sierp {

/// Coarsest equitable partition reachable by degree-seeded color refinement.
/// Colors are canonical: isomorphic graphs get the same color histogram and
/// automorphisms preserve colors.
std::vector<int> refine_colors(const Graph& g);

/// The full automorphism group, elements in lexicographic order of their
/// image vectors.
///
/// Backtracking over color-compatible candidates, pruned by requiring every
/// partial map to preserve all pairwise distances. Throws Errc::Overflow when
/// the graph exceeds limits.max_vertices or the group exceeds
/// limits.max_group_order (never truncates).
PermGroup automorphisms(const Graph& g, const SearchLimits& limits = {});

struct AutomorphismSummary {
  std::vector<Permutation> generators;
  std::uint64_t order = 0;
};

/// Generators and order of Aut(G) from a stabilizer chain along the search
/// order, without listing the group. Suits groups too large for
/// automorphisms(); only limits.max_vertices applies.
AutomorphismSummary automorphism_generators(const Graph& g, const SearchLimits& limits = {});

/// An isomorphism a -> b as an index map (result[v] is the image of v), or
/// nullopt. Deterministic: the same inputs give the same witness.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b, const SearchLimits& limits = {});

bool is_isomorphic(const Graph& a, const Graph& b, const SearchLimits& limits = {});

/// Witness rendered as "label_a -> label_b" pairs in index order of a.
std::vector<std::pair<std::string, std::string>> label_bijection(const Graph& a, const Graph& b,
                                                                 const std::vector<Vertex>& iso);

}  // namespace sierp
