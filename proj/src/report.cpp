#include "sierp/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <sstream>

#include "sierp/io.hpp"

namespace sierp {

std::string sha256_hex(const std::string& text) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), digest.data(), &len, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    out += buf;
  }
  return out;
}

Json graph_summary_json(const Graph& g) {
  return Json{{"order", g.order()}, {"size", g.size()}, {"graph6", emit_graph6(g)}};
}

Json graph_json(const Graph& g) {
  Json j = graph_summary_json(g);
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.label(e.u), g.label(e.v)});
  j["labels"] = g.labels();
  j["edges"] = std::move(edges);
  return j;
}

Json product_json(const ProductResult& p, const Counts& predicted, const Graph& outer) {
  Json phi = Json::object();
  for (Vertex g = 0; g < outer.order(); ++g) phi[outer.label(g)] = p.graph.label(p.phi[static_cast<std::size_t>(g)]);
  return Json{{"order", p.graph.order()},
              {"size", p.graph.size()},
              {"inner_edges", p.inner_edges.size()},
              {"connecting_edges", p.connecting_edges.size()},
              {"predicted", {{"order", predicted.order}, {"size", predicted.size}}},
              {"counts_match", predicted.order == static_cast<std::uint64_t>(p.graph.order()) &&
                                   predicted.size == static_cast<std::uint64_t>(p.graph.size())},
              {"phi", std::move(phi)}};
}

Json planarity_json(const PlanarityVerdict& v, const Graph& g) {
  Json j{{"planar", v.planar}};
  if (!v.planar) {
    j["obstruction"] = to_string(v.kuratowski_kind);
    Json edges = Json::array();
    for (const Edge& e : v.kuratowski) edges.push_back({g.label(e.u), g.label(e.v)});
    j["obstruction_edges"] = std::move(edges);
  }
  return j;
}

Json product_planarity_json(const ProductPlanarityReport& r, const Graph& g) {
  Json j = planarity_json(r.verdict, g);
  j["g_planar"] = r.g_planar;
  j["apex_planar"] = r.apex_planar;
  j["all_apex_planar"] = r.all_apex_planar();
  j["low_degree_sufficient"] = r.low_degree_sufficient;
  if (r.self_product_prediction) j["self_product_prediction"] = *r.self_product_prediction;
  j["consistent"] = r.consistent;
  return j;
}

Json decomposition_json(const DecompositionReport& r) {
  return Json{{"full", r.full_order},
              {"tilde", r.tilde_order},
              {"hat_b", r.hat_b_order},
              {"bar_a", r.bar_a_order},
              {"aut_g", r.aut_g_order},
              {"bar_a_matches_aut_g", r.bar_a_matches_aut_g},
              {"hat_b_normal", r.hat_b_normal},
              {"trivial_intersection", r.trivial_intersection},
              {"orders_multiply", r.orders_multiply},
              {"every_element_factors", r.every_element_factors},
              {"semidirect", r.semidirect},
              {"tilde_is_full", r.tilde_is_full},
              {"passed", r.passed()}};
}

namespace {

Json tally_json(const ConjectureTally& t) {
  return Json{{"graph_pairs", t.graph_pairs},
              {"instances", t.instances},
              {"exhaustive_pairs", t.exhaustive_pairs},
              {"sampled_pairs", t.sampled_pairs}};
}

}  // namespace

Json scan_json(const ScanReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back(Json{{"conjecture", v.conjecture},
                              {"g", v.g_graph6},
                              {"h", v.h_graph6},
                              {"map", v.map},
                              {"full", v.full_order},
                              {"tilde", v.tilde_order},
                              {"hat_b", v.hat_b_order},
                              {"bar_a", v.bar_a_order},
                              {"detail", v.detail}});
  Json overflows = Json::array();
  for (const auto& o : r.overflows)
    overflows.push_back(
        Json{{"conjecture", o.conjecture}, {"g", o.g_graph6}, {"h", o.h_graph6}, {"map", o.map}, {"message", o.message}});
  Json sanity = Json::array();
  for (const auto& s : r.sanity)
    sanity.push_back(Json{{"name", s.name},
                          {"g_biconnected", s.g_biconnected},
                          {"h_biconnected", s.h_biconnected},
                          {"full", s.full_order},
                          {"tilde", s.tilde_order},
                          {"breaking_automorphism", s.breaking_automorphism}});
  return Json{{"options",
               {{"max_n", r.options.max_n},
                {"seed", r.options.seed},
                {"exhaustive_limit", r.options.exhaustive_limit},
                {"sample_size", r.options.sample_size},
                {"locally_injective_cap", r.options.locally_injective_cap},
                {"max_vertices", r.options.limits.max_vertices}}},
              {"partition", tally_json(r.partition)},
              {"semidirect", tally_json(r.semidirect)},
              {"violations", std::move(violations)},
              {"overflows", std::move(overflows)},
              {"sanity", std::move(sanity)}};
}

std::string emit_dot(const ProductResult& p) {
  auto quoted = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "graph sierpinski {\n";
  for (const auto& l : p.graph.labels()) os << "  " << quoted(l) << ";\n";
  for (const Edge& e : p.inner_edges)
    os << "  " << quoted(p.graph.label(e.u)) << " -- " << quoted(p.graph.label(e.v)) << " [class=\"inner\"];\n";
  for (const Edge& e : p.connecting_edges)
    os << "  " << quoted(p.graph.label(e.u)) << " -- " << quoted(p.graph.label(e.v))
       << " [class=\"connecting\", color=\"red\", penwidth=2];\n";
  os << "}\n";
  return os.str();
}

}  // namespace sierp
