#pragma once

#include <cstddef>
#include <vector>

#include "sierp/permutation.hpp"

namespace sierp {

/// Caps for the brute-force searches. Exceeding either raises Errc::Overflow.
struct SearchLimits {
  int max_vertices = 40;
  std::size_t max_group_order = 1'000'000;

  /// Defaults, with max_vertices overridden by $SIERP_MAX_AUT when set.
  static SearchLimits from_env();
};

/// A permutation group given by its full element list.
///
/// Elements are kept sorted by image vector, so iteration order is canonical
/// and membership is a binary search.
class PermGroup {
 public:
  /// Trivial group on n points.
  explicit PermGroup(int degree = 0);

  int degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  bool contains(const Permutation& p) const;
  bool is_trivial() const noexcept { return elements_.size() == 1; }

  /// Takes an already closed element set (used by automorphism search).
  static PermGroup from_elements(int degree, std::vector<Permutation> elements,
                                 std::vector<Permutation> generators = {});

 private:
  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// Group generated by `gens` on `degree` points. An empty list gives the
/// trivial group. Throws Errc::Overflow once the closure exceeds
/// limits.max_group_order.
PermGroup group_closure(int degree, const std::vector<Permutation>& gens, const SearchLimits& limits = {});

bool is_subgroup(const PermGroup& sub, const PermGroup& group);

/// `normal` must be a subgroup of `group` (Errc::NotSubgroup otherwise).
bool is_normal(const PermGroup& normal, const PermGroup& group);

PermGroup intersection(const PermGroup& a, const PermGroup& b);

/// group = normal ⋊ complement: normal is normal in group, the two meet
/// trivially and |normal|·|complement| = |group|. Throws Errc::NotSubgroup
/// when either part is not contained in `group`.
bool check_semidirect(const PermGroup& group, const PermGroup& normal, const PermGroup& complement);

}  // namespace sierp
