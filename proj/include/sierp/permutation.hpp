#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sierp/graph.hpp"

namespace sierp {

/// Bijection on {0, .., n-1}, stored as the image vector.
class Permutation {
 public:
  Permutation() = default;
  /// Throws Errc::NotBijective unless `images` is a permutation of 0..n-1.
  explicit Permutation(std::vector<Vertex> images);

  static Permutation identity(int n);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  Vertex operator()(Vertex v) const { return images_[static_cast<std::size_t>(v)]; }
  const std::vector<Vertex>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// (a * b)(x) = a(b(x)): apply b first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// True iff p maps every edge of g to an edge (hence is an automorphism).
bool is_automorphism(const Graph& g, const Permutation& p);

/// Cycle notation over vertex labels, e.g. "(1 2 3)(4 5)"; identity is "()".
/// Cycles start at their smallest vertex index and are ordered by it.
std::string to_cycle_string(const Permutation& p, const Graph& g);

/// Parses cycle notation over the labels of g. Unmentioned vertices are fixed.
/// Throws Errc::Malformed or Errc::UnknownLabel.
Permutation parse_cycles(std::string_view text, const Graph& g);

}  // namespace sierp
