#include "sierp/permutation.hpp"

#include <cctype>
#include <sstream>

#include "sierp/error.hpp"

namespace sierp {

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (Vertex v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || hit[static_cast<std::size_t>(v)])
      throw Error(Errc::NotBijective, "image vector is not a permutation");
    hit[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p.images_[static_cast<std::size_t>(i)] = i;
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<Vertex>(i)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[static_cast<std::size_t>(images_[i])] = static_cast<Vertex>(i);
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error(Errc::InvalidArgument, "composing permutations of different degree");
  Permutation p;
  p.images_.resize(b.images_.size());
  for (std::size_t i = 0; i < b.images_.size(); ++i) p.images_[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
  return p;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Vertex v : p.images()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
  return h;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) return false;
  for (const Edge& e : g.edges())
    if (!g.has_edge(p(e.u), p(e.v))) return false;
  return true;
}

std::string to_cycle_string(const Permutation& p, const Graph& g) {
  std::ostringstream out;
  std::vector<char> seen(static_cast<std::size_t>(p.degree()), 0);
  bool any = false;
  for (Vertex s = 0; s < p.degree(); ++s) {
    if (seen[static_cast<std::size_t>(s)] || p(s) == s) continue;
    any = true;
    out << '(';
    Vertex v = s;
    bool first = true;
    do {
      seen[static_cast<std::size_t>(v)] = 1;
      if (!first) out << ' ';
      out << g.label(v);
      first = false;
      v = p(v);
    } while (v != s);
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

Permutation parse_cycles(std::string_view text, const Graph& g) {
  std::vector<Vertex> images(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) images[static_cast<std::size_t>(v)] = v;
  std::vector<char> moved(images.size(), 0);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw Error(Errc::Malformed, "expected '(' in cycle notation");
    ++i;
    std::vector<Vertex> cycle;
    while (true) {
      skip_ws();
      if (i == text.size()) throw Error(Errc::Malformed, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < text.size() && text[j] != ')' && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      cycle.push_back(g.index_of(text.substr(i, j - i)));
      i = j;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      auto v = static_cast<std::size_t>(cycle[k]);
      if (moved[v]) throw Error(Errc::Malformed, "vertex '" + g.label(cycle[k]) + "' appears in two cycles");
      moved[v] = 1;
      images[v] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

}  // namespace sierp
