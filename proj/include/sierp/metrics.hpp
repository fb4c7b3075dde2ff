#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sierp/graph.hpp"

namespace sierp {

inline constexpr int kUnreachable = -1;

bool is_connected(const Graph& g);
int component_count(const Graph& g);

/// BFS distances from `source`; kUnreachable for vertices in other components.
std::vector<int> bfs_distances(const Graph& g, Vertex source);
/// Row-major n*n matrix of BFS distances.
std::vector<int> all_pairs_distances(const Graph& g);

/// Shortest-path edge count; nullopt when unreachable.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);
std::optional<int> distance(const Graph& g, std::string_view u, std::string_view v);

/// Largest distance over all pairs; nullopt (infinite) when disconnected.
/// The empty graph and K1 have diameter 0.
std::optional<int> diameter(const Graph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Length of a shortest cycle through `e`; nullopt when `e` is a bridge.
std::optional<int> shortest_cycle_through(const Graph& g, Edge e);

/// 2-connected: connected, at least 3 vertices and no cut vertex.
bool is_biconnected(const Graph& g);

/// No edge is a bridge.
bool is_bridgeless(const Graph& g);

bool is_tree(const Graph& g);

}  // namespace sierp
