#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sierp/graph.hpp"
#include "sierp/perm_group.hpp"

namespace sierp {

/// One representative per isomorphism class of connected graphs on n
/// vertices, labelled 1..n, in a fixed deterministic order.
std::vector<Graph> connected_graphs(int n, const SearchLimits& limits = {});

/// Every map V(G) -> V(H) in lexicographic order of the image table.
std::vector<std::vector<Vertex>> all_maps(int order_g, int order_h);

/// Locally injective maps found by backtracking, lexicographic order,
/// stopping after `cap` maps.
std::vector<std::vector<Vertex>> locally_injective_maps(const Graph& g, int order_h, std::size_t cap);

struct ScanOptions {
  int max_n = 6;
  std::uint64_t seed = 0;
  /// Enumerate every map when |H|^|G| is at most this; otherwise sample.
  std::uint64_t exhaustive_limit = 10'000;
  std::size_t sample_size = 200;
  std::size_t locally_injective_cap = 10'000;
  SearchLimits limits;
};

struct ScanViolation {
  std::string conjecture;  // "partition" or "semidirect"
  std::string g_graph6, h_graph6;
  std::vector<Vertex> map;
  std::size_t full_order = 0, tilde_order = 0, hat_b_order = 0, bar_a_order = 0;
  std::string detail;  // e.g. a partition-breaking automorphism in cycle notation
};

struct ScanOverflow {
  std::string conjecture;
  std::string g_graph6, h_graph6;
  std::vector<Vertex> map;
  std::string message;
};

struct ConjectureTally {
  std::size_t graph_pairs = 0;
  std::size_t instances = 0;
  std::size_t exhaustive_pairs = 0;
  std::size_t sampled_pairs = 0;
};

struct SanityCase {
  std::string name;
  bool g_biconnected = false;
  bool h_biconnected = false;
  std::size_t full_order = 0;
  std::size_t tilde_order = 0;
  std::string breaking_automorphism;
};

struct ScanReport {
  ScanOptions options;
  ConjectureTally partition;   // Ã = Aut for 2-connected factors
  ConjectureTally semidirect;  // Ã = Ā ⋉ B̂ for bijective f
  std::vector<ScanViolation> violations;
  std::vector<ScanOverflow> overflows;
  std::vector<SanityCase> sanity;
};

/// Tests both symmetry conjectures on every pair of small factors:
///  - partition: G, H 2-connected with at most max_n vertices, any f; checks
///    that every automorphism of G ⊗_f H respects the edge partition;
///  - semidirect: G, H connected of equal order, f a bijection; checks that
///    Ā is a complement of the normal subgroup B̂ in Ã.
/// Overflowing instances are recorded, not fatal. Deterministic for a fixed seed.
ScanReport conjecture_scan(const ScanOptions& options);

}  // namespace sierp
