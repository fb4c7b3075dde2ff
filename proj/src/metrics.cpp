#include "sierp/metrics.hpp"

#include <algorithm>
#include <deque>

namespace sierp {

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> all_pairs_distances(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> out(n * n);
  for (Vertex v = 0; v < g.order(); ++v) {
    auto row = bfs_distances(g, v);
    std::copy(row.begin(), row.end(), out.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(v) * n));
  }
  return out;
}

int component_count(const Graph& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  int count = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++count;
    std::vector<Vertex> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
    }
  }
  return count;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  int d = bfs_distances(g, u).at(static_cast<std::size_t>(v));
  if (d == kUnreachable) return std::nullopt;
  return d;
}

std::optional<int> distance(const Graph& g, std::string_view u, std::string_view v) {
  return distance(g, g.index_of(u), g.index_of(v));
}

std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (int d : bfs_distances(g, v)) {
      if (d == kUnreachable) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

std::optional<int> girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge closing at depths (a, b) gives a
  // closed walk of length a + b + 1 containing a cycle, and the minimum over
  // all roots is attained by a true shortest cycle.
  int best = -1;
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex root = 0; root < g.order(); ++root) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    std::deque<Vertex> queue{root};
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        auto& dw = dist[static_cast<std::size_t>(w)];
        if (dw == kUnreachable) {
          dw = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        } else if (parent[static_cast<std::size_t>(u)] != w) {
          int len = dist[static_cast<std::size_t>(u)] + dw + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::optional<int> shortest_cycle_through(const Graph& g, Edge e) {
  Graph h = without_edge(g, e);
  auto d = distance(h, e.u, e.v);
  if (!d) return std::nullopt;
  return *d + 1;
}

namespace {

// Tarjan low-link; reports cut vertices and bridges.
struct LowLink {
  const Graph& g;
  std::vector<int> disc, low;
  int timer = 0;
  bool has_cut_vertex = false;
  bool has_bridge = false;

  explicit LowLink(const Graph& graph)
      : g(graph), disc(static_cast<std::size_t>(graph.order()), -1), low(static_cast<std::size_t>(graph.order()), 0) {}

  void run(Vertex u, Vertex parent) {
    disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
    int children = 0;
    for (Vertex w : g.neighbors(u)) {
      if (w == parent) continue;
      if (disc[static_cast<std::size_t>(w)] >= 0) {
        low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(w)]);
        continue;
      }
      ++children;
      run(w, u);
      low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(w)]);
      if (low[static_cast<std::size_t>(w)] > disc[static_cast<std::size_t>(u)]) has_bridge = true;
      if (parent >= 0 && low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(u)]) has_cut_vertex = true;
    }
    if (parent < 0 && children > 1) has_cut_vertex = true;
  }
};

}  // namespace

bool is_biconnected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  LowLink ll(g);
  ll.run(0, -1);
  return !ll.has_cut_vertex;
}

bool is_bridgeless(const Graph& g) {
  LowLink ll(g);
  for (Vertex v = 0; v < g.order(); ++v)
    if (ll.disc[static_cast<std::size_t>(v)] < 0) ll.run(v, -1);
  return !ll.has_bridge;
}

bool is_tree(const Graph& g) { return g.order() >= 1 && is_connected(g) && g.size() == g.order() - 1; }

}  // namespace sierp
