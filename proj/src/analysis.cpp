#include "sierp/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "sierp/automorphism.hpp"
#include "sierp/error.hpp"
#include "sierp/metrics.hpp"

namespace sierp {

Graph apex_extension(const Graph& h, const Graph& g, const VertexMap& f, Vertex gv) {
  if (gv < 0 || gv >= g.order()) throw Error(Errc::UnknownLabel, "vertex index outside G");
  Graph out(h.labels(), h.edges());
  std::string label = g.label(gv) + "_H";
  while (out.has_label(label)) label += "'";
  Vertex apex = out.add_vertex(label);
  for (Vertex n : g.neighbors(gv)) out.add_edge(apex, f(n));
  return out;
}

bool ProductPlanarityReport::all_apex_planar() const {
  return std::all_of(apex_planar.begin(), apex_planar.end(), [](bool b) { return b; });
}

namespace {

bool is_identity_map(const VertexMap& f) {
  for (Vertex v = 0; v < f.source_order(); ++v)
    if (f(v) != v) return false;
  return true;
}

bool is_k4(const Graph& g) { return g.order() == 4 && g.size() == 6; }

}  // namespace

ProductPlanarityReport product_planarity(const Graph& g, const Graph& h, const VertexMap& f) {
  if (!is_connected(g) || !is_connected(h))
    throw Error(Errc::Disconnected, "product planarity criteria need connected factors");
  ProductPlanarityReport report;
  report.verdict = is_planar(sierpinski_product(g, h, f).graph);
  report.g_planar = is_planar(g).planar;
  for (Vertex v = 0; v < g.order(); ++v) report.apex_planar.push_back(is_planar(apex_extension(h, g, f, v)).planar);
  report.self_product_identity = (g == h) && is_identity_map(f);
  if (report.self_product_identity) report.self_product_prediction = is_outerplanar(g) || is_k4(g);
  report.low_degree_sufficient = report.g_planar && g.max_degree() <= 3 && is_outerplanar(h);

  bool ok = true;
  if (!report.g_planar || !report.all_apex_planar()) ok = ok && !report.verdict.planar;
  if (report.self_product_prediction) ok = ok && (*report.self_product_prediction == report.verdict.planar);
  if (report.low_degree_sufficient) ok = ok && report.verdict.planar;
  report.consistent = ok;
  return report;
}

namespace {

// Multigraph with rotation systems over darts. Dart 2e leaves edges[e].first,
// dart 2e+1 leaves edges[e].second.
struct MultiGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<std::vector<int>> darts_at() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < edges.size(); ++e) {
      out[static_cast<std::size_t>(edges[e].first)].push_back(static_cast<int>(2 * e));
      out[static_cast<std::size_t>(edges[e].second)].push_back(static_cast<int>(2 * e + 1));
    }
    return out;
  }

  int components() const {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    int c = n;
    for (auto [a, b] : edges) {
      int ra = find(a), rb = find(b);
      if (ra != rb) {
        parent[static_cast<std::size_t>(ra)] = rb;
        --c;
      }
    }
    return c;
  }
};

std::uint64_t factorial_capped(int k, std::uint64_t cap) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) {
    f *= static_cast<std::uint64_t>(i);
    if (f > cap) return cap + 1;
  }
  return f;
}

// Every cyclic order of `darts`: the first dart fixed, the rest permuted.
std::vector<std::vector<int>> cyclic_orders(std::vector<int> darts) {
  std::vector<std::vector<int>> out;
  if (darts.size() <= 2) {
    out.push_back(darts);
    return out;
  }
  std::sort(darts.begin() + 1, darts.end());
  do out.push_back(darts);
  while (std::next_permutation(darts.begin() + 1, darts.end()));
  return out;
}

// Calls visit(rotation) for every rotation system of m that embeds in the sphere.
template <typename Visit>
void for_each_planar_rotation(const MultiGraph& m, std::uint64_t limit, Visit&& visit) {
  const auto darts = m.darts_at();
  std::uint64_t total = 1;
  for (const auto& d : darts) {
    total *= factorial_capped(static_cast<int>(d.size()) - 1, limit);
    if (total > limit) throw Error(Errc::Overflow, "embedding enumeration exceeds " + std::to_string(limit) + " rotation systems");
  }
  std::vector<std::vector<std::vector<int>>> choices;
  for (const auto& d : darts) choices.push_back(cyclic_orders(d));

  const int comps = m.components();
  int isolated = 0;
  for (const auto& d : darts)
    if (d.empty()) ++isolated;
  const int target_faces = 2 * comps - m.n + static_cast<int>(m.edges.size());

  const std::size_t ndarts = 2 * m.edges.size();
  std::vector<int> next_at(ndarts);  // rotation successor of a dart at its tail
  std::vector<char> seen(ndarts);
  std::vector<std::size_t> pick(static_cast<std::size_t>(m.n), 0);
  std::vector<std::vector<int>> rotation(static_cast<std::size_t>(m.n));

  while (true) {
    for (int v = 0; v < m.n; ++v) {
      const auto& order = choices[static_cast<std::size_t>(v)][pick[static_cast<std::size_t>(v)]];
      for (std::size_t i = 0; i < order.size(); ++i)
        next_at[static_cast<std::size_t>(order[i])] = order[(i + 1) % order.size()];
    }
    // Face permutation: dart d (u->w) is followed by next_at[reverse(d)].
    std::fill(seen.begin(), seen.end(), 0);
    int faces = isolated;
    for (std::size_t d = 0; d < ndarts; ++d) {
      if (seen[d]) continue;
      ++faces;
      std::size_t x = d;
      while (!seen[x]) {
        seen[x] = 1;
        x = static_cast<std::size_t>(next_at[x ^ 1U]);
      }
    }
    if (faces == target_faces) {
      for (int v = 0; v < m.n; ++v)
        rotation[static_cast<std::size_t>(v)] = choices[static_cast<std::size_t>(v)][pick[static_cast<std::size_t>(v)]];
      if (!visit(rotation)) return;
    }
    int v = 0;
    for (; v < m.n; ++v) {
      auto& p = pick[static_cast<std::size_t>(v)];
      if (++p < choices[static_cast<std::size_t>(v)].size()) break;
      p = 0;
    }
    if (v == m.n) return;
  }
}

std::vector<int> canonical_cycle(std::vector<int> seq) {
  if (seq.empty()) return seq;
  auto it = std::min_element(seq.begin(), seq.end());
  std::rotate(seq.begin(), it, seq.end());
  return seq;
}

}  // namespace

EmbeddingConditionResult embedding_condition_check(const Graph& g, const Graph& h, const VertexMap& f,
                                                   int vertex_limit, std::uint64_t rotation_limit) {
  if (g.order() > vertex_limit || h.order() + 1 > vertex_limit)
    throw Error(Errc::Overflow, "embedding enumeration limited to " + std::to_string(vertex_limit) + " vertices");

  // achievable[g]: canonical cyclic orders (as neighbor positions of g) that
  // appear around the new vertex in some planar embedding of H + g.
  std::vector<std::set<std::vector<int>>> achievable(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    MultiGraph m;
    m.n = h.order() + 1;
    for (const Edge& e : h.edges()) m.edges.emplace_back(e.u, e.v);
    const int first_apex_edge = static_cast<int>(m.edges.size());
    for (Vertex n : g.neighbors(v)) m.edges.emplace_back(h.order(), f(n));
    auto& out = achievable[static_cast<std::size_t>(v)];
    for_each_planar_rotation(m, rotation_limit, [&](const std::vector<std::vector<int>>& rot) {
      std::vector<int> seq;
      for (int d : rot[static_cast<std::size_t>(h.order())]) seq.push_back(d / 2 - first_apex_edge);
      out.insert(canonical_cycle(std::move(seq)));
      return true;
    });
  }

  MultiGraph mg;
  mg.n = g.order();
  for (const Edge& e : g.edges()) mg.edges.emplace_back(e.u, e.v);
  // Position of each neighbor inside g.neighbors(v), keyed by edge id.
  std::vector<std::pair<int, int>> pos_in(mg.edges.size());
  for (std::size_t e = 0; e < mg.edges.size(); ++e) {
    auto [a, b] = mg.edges[e];
    const auto& na = g.neighbors(a);
    const auto& nb = g.neighbors(b);
    pos_in[e] = {static_cast<int>(std::lower_bound(na.begin(), na.end(), b) - na.begin()),
                 static_cast<int>(std::lower_bound(nb.begin(), nb.end(), a) - nb.begin())};
  }

  EmbeddingConditionResult result;
  for_each_planar_rotation(mg, rotation_limit, [&](const std::vector<std::vector<int>>& rot) {
    ++result.g_embeddings_tried;
    bool reversed_ok = true, forward_ok = true;
    for (Vertex v = 0; v < g.order(); ++v) {
      std::vector<int> seq;
      for (int d : rot[static_cast<std::size_t>(v)]) {
        const auto e = static_cast<std::size_t>(d / 2);
        seq.push_back((d % 2 == 0) ? pos_in[e].first : pos_in[e].second);
      }
      const auto& ok = achievable[static_cast<std::size_t>(v)];
      std::vector<int> rev(seq.rbegin(), seq.rend());
      if (!ok.count(canonical_cycle(rev))) reversed_ok = false;
      if (!ok.count(canonical_cycle(seq))) forward_ok = false;
    }
    result.holds = result.holds || reversed_ok;
    result.holds_unreversed = result.holds_unreversed || forward_ok;
    return !(result.holds && result.holds_unreversed);
  });
  return result;
}

std::int64_t genus_lower_bound(std::int64_t genus_g, std::int64_t order_g, std::int64_t genus_h) {
  if (genus_g < 0 || order_g < 0 || genus_h < 0) throw Error(Errc::InvalidArgument, "genus bound inputs must be nonnegative");
  return genus_g + order_g * genus_h;
}

namespace {

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "diameter bound exceeds 64 bits");
  return r;
}

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "diameter bound exceeds 64 bits");
  return r;
}

void check_diameters(const std::vector<std::int64_t>& d) {
  if (d.empty()) throw Error(Errc::InvalidArgument, "diameter bound needs at least one factor");
  for (auto x : d)
    if (x < 0) throw Error(Errc::InvalidArgument, "diameters must be nonnegative");
}

}  // namespace

std::int64_t diameter_bound_recursive(const std::vector<std::int64_t>& d) {
  check_diameters(d);
  std::int64_t a = d.front();
  for (std::size_t k = 1; k < d.size(); ++k) a = add_checked(mul_checked(add_checked(d[k], 1), a), d[k]);
  return a;
}

std::int64_t diameter_bound_closed_form(const std::vector<std::int64_t>& d) {
  check_diameters(d);
  if (d.size() > 30) throw Error(Errc::Overflow, "subset enumeration limited to 30 factors");
  const std::uint64_t subsets = 1ULL << d.size();
  std::int64_t sum = 0;
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    std::int64_t prod = 1;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (mask >> i & 1U) prod = mul_checked(prod, d[i]);
    sum = add_checked(sum, prod);
  }
  return sum;
}

std::int64_t diameter_bound(const std::vector<std::int64_t>& diameters) {
  const auto rec = diameter_bound_recursive(diameters);
  if (diameters.size() <= 30) {
    const auto closed = diameter_bound_closed_form(diameters);
    if (rec != closed)
      throw std::logic_error("diameter bound recursion (" + std::to_string(rec) + ") disagrees with closed form (" +
                             std::to_string(closed) + ")");
  }
  return rec;
}

ConnectingEdgeCycleReport connecting_edge_cycle_check(const Graph& g, const Graph& h, const VertexMap& f,
                                                      const ProductResult& product) {
  (void)h;
  ConnectingEdgeCycleReport report;
  report.locally_injective = is_locally_injective(g, f);
  report.all_hold = true;
  for (const Edge& pe : product.connecting_edges) {
    ConnectingEdgeCycle item;
    item.product_edge = pe;
    item.factor_edge = Edge(product.copy_of(pe.u), product.copy_of(pe.v));
    item.factor_cycle = shortest_cycle_through(g, item.factor_edge);
    item.product_cycle = shortest_cycle_through(product.graph, pe);
    if (!item.factor_cycle) {
      item.holds = !item.product_cycle.has_value();
    } else {
      const int need = report.locally_injective ? 2 * *item.factor_cycle : *item.factor_cycle;
      item.holds = !item.product_cycle || *item.product_cycle >= need;
    }
    report.all_hold = report.all_hold && item.holds;
    report.edges.push_back(item);
  }
  return report;
}

}  // namespace sierp
