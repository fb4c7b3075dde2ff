#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sierp/analysis.hpp"
#include "sierp/graph.hpp"
#include "sierp/product.hpp"
#include "sierp/scan.hpp"
#include "sierp/symmetry.hpp"

namespace sierp {

using Json = nlohmann::ordered_json;

/// Bumped whenever a field changes meaning or disappears.
inline constexpr int kReportSchemaVersion = 1;

/// Hex SHA-256 of `text`.
std::string sha256_hex(const std::string& text);

Json graph_summary_json(const Graph& g);
/// Summary plus the full edge list as label pairs.
Json graph_json(const Graph& g);

/// Order, size, edge classes, predicted counts and φ keyed by `outer` labels.
Json product_json(const ProductResult& p, const Counts& predicted, const Graph& outer);

Json planarity_json(const PlanarityVerdict& v, const Graph& g);
Json product_planarity_json(const ProductPlanarityReport& r, const Graph& g);
Json decomposition_json(const DecompositionReport& r);
Json scan_json(const ScanReport& r);

/// DOT with connecting edges marked `class="connecting"` and drawn bold red.
std::string emit_dot(const ProductResult& p);

}  // namespace sierp
