#pragma once

#include <optional>
#include <string_view>

#include "sierp/graph.hpp"

namespace sierp {

// Built-in graphs, vertices labelled 1..n.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// Parts {1..a} and {a+1..a+b}.
Graph complete_bipartite(int a, int b);
/// Square 1-2-3-4 with roof vertex 5 on edge 1-4.
Graph house_graph();
/// Triangles {1,2,6} and {3,4,5} joined by the edge 5-6.
Graph two_triangles_bridged();

/// "K4", "C5", "P6", "K2,3", "house", "2K3+e"; nullopt for anything else.
std::optional<Graph> named_graph(std::string_view name);

}  // namespace sierp
