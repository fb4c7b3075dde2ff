#include "sierp/io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "sierp/error.hpp"

namespace sierp {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

Vertex intern(Graph& g, const std::string& label) {
  return g.has_label(label) ? g.index_of(label) : g.add_vertex(label);
}

void check_label(const std::string& label) {
  if (label.empty() || label.front() == '#')
    throw Error(Errc::InvalidArgument, "label '" + label + "' cannot be written as an edge list");
  for (char c : label)
    if (std::isspace(static_cast<unsigned char>(c)))
      throw Error(Errc::InvalidArgument, "label '" + label + "' contains whitespace");
}

constexpr int kGraph6Offset = 63;

}  // namespace

Graph parse_edge_list(std::string_view text) {
  Graph g;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.size() > 2)
      throw Error(Errc::Malformed, "line " + std::to_string(line_no) + ": expected 'u v', got " +
                                       std::to_string(tokens.size()) + " tokens");
    if (tokens.size() == 1) {
      intern(g, tokens[0]);
    } else {
      if (tokens[0] == tokens[1])
        throw Error(Errc::Loop, "line " + std::to_string(line_no) + ": loop at '" + tokens[0] + "'");
      Vertex a = intern(g, tokens[0]);
      Vertex b = intern(g, tokens[1]);
      g.add_edge(a, b);
    }
    if (end == text.size()) break;
  }
  return g;
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const auto& l : g.labels()) check_label(l);
  for (const Edge& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) out << g.label(v) << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw Error(Errc::Malformed, "empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126) throw Error(Errc::Malformed, "graph6 byte out of range");

  auto byte = [&](std::size_t i) { return static_cast<long long>(text[i] - kGraph6Offset); };
  long long n = 0;
  std::size_t header = 0;
  if (text[0] != 126) {
    n = byte(0);
    header = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw Error(Errc::Malformed, "truncated graph6 size field");
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    header = 4;
  } else {
    if (text.size() < 8) throw Error(Errc::Malformed, "truncated graph6 size field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
    header = 8;
  }
  const long long bits = n * (n - 1) / 2;
  const auto expected = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - header != expected)
    throw Error(Errc::Malformed, "graph6 body has " + std::to_string(text.size() - header) +
                                     " bytes, expected " + std::to_string(expected) + " for n=" +
                                     std::to_string(n));

  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      long long b = byte(header + static_cast<std::size_t>(k / 6));
      if ((b >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bits must be zero.
  for (; k < static_cast<long long>(expected) * 6; ++k)
    if ((byte(header + static_cast<std::size_t>(k / 6)) >> (5 - k % 6)) & 1)
      throw Error(Errc::Malformed, "nonzero graph6 padding");
  return Graph::with_indices(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Offset));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kGraph6Offset));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kGraph6Offset));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kGraph6Offset));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kGraph6Offset));
  return out;
}

}  // namespace sierp
