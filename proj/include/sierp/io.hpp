#pragma once

#include <string>
#include <string_view>

#include "sierp/graph.hpp"

namespace sierp {

/// Reads a whitespace-separated edge list: one "u v" pair per line, '#'
/// starts a comment line, blank lines are skipped. A line holding a single
/// label declares an isolated vertex. Vertices are numbered in order of first
/// appearance; repeated edges collapse.
///
/// Throws Errc::Loop for "u u" and Errc::Malformed (with the 1-based line
/// number in the message) for lines with more than two tokens.
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list: edges in index order, then isolated vertices.
std::string emit_edge_list(const Graph& g);

/// Standard graph6 decoding. Vertices are labelled "0".."n-1".
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

}  // namespace sierp
