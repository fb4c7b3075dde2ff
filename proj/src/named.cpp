#include "sierp/named.hpp"

#include <charconv>
#include <string>

#include "sierp/error.hpp"

namespace sierp {

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::with_indices(n, edges, true);
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(Errc::InvalidArgument, "cycles need at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::with_indices(n, edges, true);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::with_indices(n, edges, true);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph::with_indices(a + b, edges, true);
}

Graph house_graph() { return Graph::with_indices(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {3, 4}}, true); }

Graph two_triangles_bridged() {
  return Graph::with_indices(6, {{0, 1}, {1, 5}, {5, 0}, {2, 3}, {3, 4}, {4, 2}, {4, 5}}, true);
}

namespace {

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace

std::optional<Graph> named_graph(std::string_view name) {
  if (name == "house") return house_graph();
  if (name == "2K3+e") return two_triangles_bridged();
  if (name.size() < 2) return std::nullopt;
  const char kind = name.front();
  const std::string_view rest = name.substr(1);
  if (kind == 'K') {
    if (auto comma = rest.find(','); comma != std::string_view::npos) {
      auto a = to_int(rest.substr(0, comma));
      auto b = to_int(rest.substr(comma + 1));
      if (a && b && *a >= 0 && *b >= 0) return complete_bipartite(*a, *b);
      return std::nullopt;
    }
    if (auto n = to_int(rest); n && *n >= 0) return complete_graph(*n);
  }
  if (kind == 'C')
    if (auto n = to_int(rest); n && *n >= 3) return cycle_graph(*n);
  if (kind == 'P')
    if (auto n = to_int(rest); n && *n >= 0) return path_graph(*n);
  return std::nullopt;
}

}  // namespace sierp
