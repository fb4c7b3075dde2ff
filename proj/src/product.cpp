#include "sierp/product.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_set>

#include "sierp/error.hpp"

namespace sierp {

VertexMap::VertexMap(const Graph& source, const Graph& target, std::vector<Vertex> table)
    : table_(std::move(table)), target_order_(target.order()) {
  if (static_cast<int>(table_.size()) != source.order())
    throw Error(Errc::ArityMismatch, "map covers " + std::to_string(table_.size()) + " vertices, source has " +
                                         std::to_string(source.order()));
  for (Vertex h : table_)
    if (h < 0 || h >= target_order_) throw Error(Errc::ArityMismatch, "map image outside the target graph");
}

VertexMap VertexMap::identity(const Graph& source, const Graph& target) {
  std::vector<Vertex> table;
  for (const auto& l : source.labels()) table.push_back(target.index_of(l));
  return VertexMap(source, target, std::move(table));
}

VertexMap VertexMap::modulo(const Graph& source, const Graph& target, int k) {
  if (k <= 0) k = target.order();
  if (k <= 0 || k > target.order()) throw Error(Errc::InvalidArgument, "modulus must be in 1..|target|");
  std::vector<Vertex> table;
  for (Vertex g = 0; g < source.order(); ++g) table.push_back(g % k);
  return VertexMap(source, target, std::move(table));
}

VertexMap VertexMap::from_pairs(const Graph& source, const Graph& target,
                                const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<Vertex> table(static_cast<std::size_t>(source.order()), -1);
  for (const auto& [s, t] : pairs) {
    Vertex g = source.index_of(s);
    if (table[static_cast<std::size_t>(g)] >= 0)
      throw Error(Errc::Malformed, "source vertex '" + s + "' mapped more than once");
    table[static_cast<std::size_t>(g)] = target.index_of(t);
  }
  for (Vertex g = 0; g < source.order(); ++g)
    if (table[static_cast<std::size_t>(g)] < 0)
      throw Error(Errc::ArityMismatch, "source vertex '" + source.label(g) + "' has no image");
  return VertexMap(source, target, std::move(table));
}

bool VertexMap::is_bijective() const {
  if (source_order() != target_order_) return false;
  std::vector<char> hit(static_cast<std::size_t>(target_order_), 0);
  for (Vertex h : table_) {
    if (hit[static_cast<std::size_t>(h)]) return false;
    hit[static_cast<std::size_t>(h)] = 1;
  }
  return true;
}

VertexMap parse_vertex_map(std::string_view text, const Graph& source, const Graph& target) {
  std::vector<std::pair<std::string, std::string>> pairs;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) tokens.emplace_back(line.substr(i, j - i));
      i = j;
    }
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2)
      throw Error(Errc::Malformed, "map line " + std::to_string(line_no) + ": expected 'g h'");
    pairs.emplace_back(tokens[0], tokens[1]);
  }
  return VertexMap::from_pairs(source, target, pairs);
}

std::string emit_vertex_map(const VertexMap& f, const Graph& source, const Graph& target) {
  std::string out;
  for (Vertex g = 0; g < source.order(); ++g) out += source.label(g) + ' ' + target.label(f(g)) + '\n';
  return out;
}

bool is_locally_injective(const Graph& source, const VertexMap& f) {
  std::vector<int> stamp(static_cast<std::size_t>(f.target_order()), -1);
  for (Vertex g = 0; g < source.order(); ++g) {
    for (Vertex n : source.neighbors(g)) {
      auto& s = stamp[static_cast<std::size_t>(f(n))];
      if (s == g) return false;
      s = g;
    }
  }
  return true;
}

EdgeClass ProductResult::classify(Edge e) const {
  if (!graph.has_edge(e.u, e.v)) throw Error(Errc::UnknownEdge, "not an edge of the product");
  return copy_of(e.u) == copy_of(e.v) ? EdgeClass::Inner : EdgeClass::Connecting;
}

EdgeClass ProductResult::classify(std::string_view a, std::string_view b) const {
  Vertex u = graph.index_of(a);
  Vertex v = graph.index_of(b);
  if (u == v || !graph.has_edge(u, v))
    throw Error(Errc::UnknownEdge, "{" + std::string(a) + ", " + std::string(b) + "} is not an edge of the product");
  return classify(Edge(u, v));
}

namespace {

// Product with an explicit inner coordinate table so chain steps can reuse it.
ProductResult build(const Graph& g, const Graph& h, const std::vector<std::vector<Vertex>>& inner_coords,
                    const std::vector<Vertex>& f, const std::string& sep) {
  ProductResult out;
  out.copy_size = h.order();
  out.separator = sep;
  const int nh = h.order();
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(g.order() * nh));
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = 0; b < nh; ++b) {
      labels.push_back(g.label(a) + sep + h.label(b));
      std::vector<Vertex> c{a};
      const auto& rest = inner_coords[static_cast<std::size_t>(b)];
      c.insert(c.end(), rest.begin(), rest.end());
      out.coords.push_back(std::move(c));
    }
  }
  out.graph = Graph();
  for (auto& l : labels) {
    if (out.graph.has_label(l))
      throw Error(Errc::InvalidArgument, "product label '" + l + "' is ambiguous; choose another separator");
    out.graph.add_vertex(std::move(l));
  }
  const auto h_edges = h.edges();
  for (Vertex a = 0; a < g.order(); ++a) {
    for (const Edge& e : h_edges) {
      Edge pe(a * nh + e.u, a * nh + e.v);
      out.graph.add_edge(pe.u, pe.v);
      out.inner_edges.push_back(pe);
    }
  }
  for (const Edge& e : g.edges()) {
    Edge pe(e.u * nh + f[static_cast<std::size_t>(e.v)], e.v * nh + f[static_cast<std::size_t>(e.u)]);
    out.graph.add_edge(pe.u, pe.v);
    out.connecting_edges.push_back(pe);
  }
  std::sort(out.inner_edges.begin(), out.inner_edges.end());
  std::sort(out.connecting_edges.begin(), out.connecting_edges.end());
  for (Vertex a = 0; a < g.order(); ++a) out.phi.push_back(a * nh + f[static_cast<std::size_t>(a)]);
  return out;
}

std::vector<std::vector<Vertex>> singleton_coords(int n) {
  std::vector<std::vector<Vertex>> c;
  for (Vertex v = 0; v < n; ++v) c.push_back({v});
  return c;
}

}  // namespace

ProductResult sierpinski_product(const Graph& g, const Graph& h, const VertexMap& f, const std::string& separator) {
  if (f.source_order() != g.order() || f.target_order() != h.order())
    throw Error(Errc::ArityMismatch, "map does not go from the first factor to the second");
  return build(g, h, singleton_coords(h.order()), f.table(), separator);
}

ProductResult chain_product(const ChainSpec& spec) {
  const std::size_t m = spec.factors.size();
  if (m == 0) throw Error(Errc::InvalidArgument, "a chain needs at least one factor");
  if (spec.maps.size() != m - 1)
    throw Error(Errc::ArityMismatch, std::to_string(m) + " factors need " + std::to_string(m - 1) + " maps, got " +
                                         std::to_string(spec.maps.size()));
  for (std::size_t k = 0; k + 1 < m; ++k) {
    const auto& f = spec.maps[k];
    if (f.source_order() != spec.factors[k].order() || f.target_order() != spec.factors[k + 1].order())
      throw Error(Errc::ArityMismatch, "map " + std::to_string(k + 1) + " does not fit factors " + std::to_string(k + 1) +
                                           " and " + std::to_string(k + 2));
  }

  // Innermost factor alone: a single copy, all edges inner, φ the identity.
  const Graph& g1 = spec.factors[m - 1];
  ProductResult k;
  k.graph = g1;
  k.coords = singleton_coords(g1.order());
  k.inner_edges = g1.edges();
  k.copy_size = g1.order();
  k.separator = spec.separator;
  for (Vertex v = 0; v < g1.order(); ++v) k.phi.push_back(v);

  for (std::size_t idx = m - 1; idx-- > 0;) {
    const Graph& outer = spec.factors[idx];
    const VertexMap& f = spec.maps[idx];
    std::vector<Vertex> composed;
    for (Vertex a = 0; a < outer.order(); ++a) composed.push_back(k.phi[static_cast<std::size_t>(f(a))]);
    k = build(outer, k.graph, k.coords, composed, spec.separator);
  }
  return k;
}

ProductResult generalized_sierpinski(const Graph& g, int n, const std::string& separator) {
  if (n < 1) throw Error(Errc::InvalidArgument, "generalized Sierpinski graph needs n >= 1");
  ChainSpec spec;
  spec.separator = separator;
  for (int i = 0; i < n; ++i) spec.factors.push_back(g);
  for (int i = 0; i + 1 < n; ++i) spec.maps.push_back(VertexMap::identity(g, g));
  return chain_product(spec);
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) throw Error(Errc::Overflow, "count exceeds 64 bits");
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a) throw Error(Errc::Overflow, "count exceeds 64 bits");
  return a + b;
}

}  // namespace

Counts predicted_counts(const ChainSpec& spec) {
  // order = prod |G_l|; size = sum_l (prod_{j>l} |G_j|) ||G_l||, factors[0] = G_m.
  Counts c{1, 0};
  std::uint64_t outer = 1;
  for (const Graph& g : spec.factors) {
    c.size = checked_add(c.size, checked_mul(outer, static_cast<std::uint64_t>(g.size())));
    outer = checked_mul(outer, static_cast<std::uint64_t>(g.order()));
  }
  c.order = outer;
  return c;
}

Counts predicted_counts(const Graph& g, const Graph& h) {
  ChainSpec spec;
  spec.factors = {g, h};
  return predicted_counts(spec);
}

}  // namespace sierp
