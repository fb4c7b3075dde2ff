#include "sierp/planarity.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

#include "sierp/error.hpp"
#include "sierp/metrics.hpp"

namespace sierp {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(static_cast<std::size_t>(g.order()));
  int idx = 0;
  for (const Edge& e : g.edges()) {
    auto [edge, ok] = boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
    (void)ok;
    boost::put(boost::edge_index, bg, edge, idx++);
  }
  return bg;
}

bool planar_edges(int n, const std::vector<Edge>& edges) {
  BoostGraph bg(static_cast<std::size_t>(n));
  for (const Edge& e : edges) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

// Drops edges while the rest stays non-planar. What remains is edge-minimal
// non-planar, hence a subdivision of K5 or K3,3.
std::vector<Edge> minimize_obstruction(int n, std::vector<Edge> edges) {
  std::size_t i = 0;
  while (i < edges.size()) {
    std::vector<Edge> trial;
    trial.reserve(edges.size() - 1);
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (k != i) trial.push_back(edges[k]);
    if (!planar_edges(n, trial)) edges = std::move(trial);
    else ++i;
  }
  return edges;
}

}  // namespace

int count_faces(const Graph& g, const RotationSystem& rotation) {
  // Dart (u -> w) is followed by (w -> next-after-u in the rotation at w).
  std::map<std::pair<Vertex, Vertex>, bool> used;
  std::vector<std::map<Vertex, std::size_t>> position(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& around = rotation.around[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < around.size(); ++i) position[static_cast<std::size_t>(v)][around[i]] = i;
  }
  int faces = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      ++faces;
      continue;
    }
    for (Vertex w : rotation.around[static_cast<std::size_t>(v)]) {
      if (used[{v, w}]) continue;
      ++faces;
      Vertex a = v, b = w;
      while (!used[{a, b}]) {
        used[{a, b}] = true;
        const auto& around_b = rotation.around[static_cast<std::size_t>(b)];
        std::size_t i = position[static_cast<std::size_t>(b)].at(a);
        Vertex c = around_b[(i + 1) % around_b.size()];
        a = b;
        b = c;
      }
    }
  }
  return faces;
}

bool is_planar_rotation(const Graph& g, const RotationSystem& rotation) {
  if (static_cast<int>(rotation.around.size()) != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto listed = rotation.around[static_cast<std::size_t>(v)];
    std::sort(listed.begin(), listed.end());
    if (listed != g.neighbors(v)) return false;
  }
  const int faces = count_faces(g, rotation);
  return g.order() - g.size() + faces == 2 * component_count(g);
}

PlanarityVerdict is_planar(const Graph& g) {
  PlanarityVerdict verdict;
  BoostGraph bg = to_boost(g);
  using EmbeddingStorage = std::vector<std::vector<BoostEdge>>;
  EmbeddingStorage storage(static_cast<std::size_t>(g.order()));
  auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));
  std::vector<BoostEdge> kuratowski;
  verdict.planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                       boost::boyer_myrvold_params::embedding = embedding,
                                                       boost::boyer_myrvold_params::kuratowski_subgraph =
                                                           std::back_inserter(kuratowski));
  if (verdict.planar) {
    verdict.embedding.around.resize(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
      for (const BoostEdge& e : storage[static_cast<std::size_t>(v)]) {
        auto s = static_cast<Vertex>(boost::source(e, bg));
        auto t = static_cast<Vertex>(boost::target(e, bg));
        verdict.embedding.around[static_cast<std::size_t>(v)].push_back(s == v ? t : s);
      }
    }
  } else {
    for (const BoostEdge& e : kuratowski)
      verdict.kuratowski.emplace_back(static_cast<Vertex>(boost::source(e, bg)), static_cast<Vertex>(boost::target(e, bg)));
    std::sort(verdict.kuratowski.begin(), verdict.kuratowski.end());
    verdict.kuratowski.erase(std::unique(verdict.kuratowski.begin(), verdict.kuratowski.end()), verdict.kuratowski.end());
    verdict.kuratowski = minimize_obstruction(g.order(), std::move(verdict.kuratowski));
    verdict.kuratowski_kind = classify_kuratowski(g, verdict.kuratowski);
  }
  return verdict;
}

KuratowskiKind classify_kuratowski(const Graph& g, const std::vector<Edge>& edges) {
  const Graph sub = Graph::with_indices(g.order(), edges);
  std::vector<Vertex> branch;
  for (Vertex v = 0; v < sub.order(); ++v) {
    const int d = sub.degree(v);
    if (d >= 3) branch.push_back(v);
    else if (d == 1) return KuratowskiKind::None;
  }
  if (branch.size() != 5 && branch.size() != 6) return KuratowskiKind::None;
  // Follow each branch vertex's paths through degree-2 vertices.
  std::set<Edge> skeleton;
  std::size_t path_count = 0;
  std::vector<char> visited(static_cast<std::size_t>(sub.order()), 0);
  for (Vertex b : branch) {
    for (Vertex first : sub.neighbors(b)) {
      Vertex prev = b, cur = first;
      while (sub.degree(cur) == 2) {
        visited[static_cast<std::size_t>(cur)] = 1;
        const auto& nb = sub.neighbors(cur);
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      if (cur == b) return KuratowskiKind::None;
      skeleton.insert(Edge(b, cur));
      ++path_count;
    }
  }
  for (Vertex v = 0; v < sub.order(); ++v)
    if (sub.degree(v) == 2 && !visited[static_cast<std::size_t>(v)]) return KuratowskiKind::None;  // stray cycle
  path_count /= 2;
  if (path_count != skeleton.size()) return KuratowskiKind::None;  // parallel paths
  if (branch.size() == 5) {
    for (Vertex b : branch)
      if (sub.degree(b) != 4) return KuratowskiKind::None;
    return skeleton.size() == 10 ? KuratowskiKind::K5 : KuratowskiKind::None;
  }
  for (Vertex b : branch)
    if (sub.degree(b) != 3) return KuratowskiKind::None;
  if (skeleton.size() != 9) return KuratowskiKind::None;
  // 2-colour the skeleton
  std::map<Vertex, int> side{{branch[0], 0}};
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Edge& e : skeleton) {
      auto iu = side.find(e.u), iv = side.find(e.v);
      if (iu != side.end() && iv == side.end()) side[e.v] = 1 - iu->second, changed = true;
      else if (iv != side.end() && iu == side.end()) side[e.u] = 1 - iv->second, changed = true;
      else if (iu != side.end() && iv != side.end() && iu->second == iv->second) return KuratowskiKind::None;
    }
  }
  if (side.size() != 6) return KuratowskiKind::None;
  int left = 0;
  for (const auto& [v, c] : side) left += c == 0;
  return left == 3 ? KuratowskiKind::K33 : KuratowskiKind::None;
}

bool is_outerplanar(const Graph& g) {
  Graph apex(g.labels(), g.edges());
  std::string label = "apex";
  while (apex.has_label(label)) label += "'";
  Vertex a = apex.add_vertex(label);
  for (Vertex v = 0; v < g.order(); ++v) apex.add_edge(a, v);
  return is_planar(apex).planar;
}

const char* to_string(KuratowskiKind kind) noexcept {
  switch (kind) {
    case KuratowskiKind::None: return "none";
    case KuratowskiKind::K5: return "K5";
    case KuratowskiKind::K33: return "K3,3";
  }
  return "none";
}

}  // namespace sierp
