#include "sierp/perm_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>
#include <unordered_set>

#include "sierp/error.hpp"

namespace sierp {

SearchLimits SearchLimits::from_env() {
  SearchLimits limits;
  if (const char* env = std::getenv("SIERP_MAX_AUT"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0)
      throw Error(Errc::InvalidArgument, std::string("SIERP_MAX_AUT must be a positive integer, got '") + env + "'");
    limits.max_vertices = static_cast<int>(v);
  }
  return limits;
}

PermGroup::PermGroup(int degree) : degree_(degree), elements_{Permutation::identity(degree)} {}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

PermGroup PermGroup::from_elements(int degree, std::vector<Permutation> elements, std::vector<Permutation> generators) {
  PermGroup g(degree);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  g.elements_ = std::move(elements);
  g.generators_ = std::move(generators);
  return g;
}

PermGroup group_closure(int degree, const std::vector<Permutation>& gens, const SearchLimits& limits) {
  std::vector<Permutation> useful;
  for (const auto& g : gens) {
    if (g.degree() != degree) throw Error(Errc::InvalidArgument, "generator degree mismatch");
    if (!g.is_identity() && std::find(useful.begin(), useful.end(), g) == useful.end()) useful.push_back(g);
  }
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> elements;
  std::deque<Permutation> frontier;
  auto visit = [&](Permutation p) {
    if (seen.insert(p).second) {
      if (seen.size() > limits.max_group_order)
        throw Error(Errc::Overflow, "group closure exceeds " + std::to_string(limits.max_group_order) + " elements");
      elements.push_back(p);
      frontier.push_back(std::move(p));
    }
  };
  visit(Permutation::identity(degree));
  // In a finite group right multiplication by generators reaches every element.
  while (!frontier.empty()) {
    Permutation p = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : useful) visit(p * g);
  }
  return PermGroup::from_elements(degree, std::move(elements), std::move(useful));
}

bool is_subgroup(const PermGroup& sub, const PermGroup& group) {
  if (sub.degree() != group.degree() || group.order() % sub.order() != 0) return false;
  return std::all_of(sub.elements().begin(), sub.elements().end(),
                     [&](const Permutation& p) { return group.contains(p); });
}

bool is_normal(const PermGroup& normal, const PermGroup& group) {
  if (!is_subgroup(normal, group)) throw Error(Errc::NotSubgroup, "normality test on a non-subgroup");
  const auto& conj = group.generators().empty() ? group.elements() : group.generators();
  const auto& targets = normal.generators().empty() ? normal.elements() : normal.generators();
  for (const auto& g : conj) {
    Permutation gi = g.inverse();
    for (const auto& n : targets)
      if (!normal.contains(g * n * gi)) return false;
  }
  return true;
}

PermGroup intersection(const PermGroup& a, const PermGroup& b) {
  std::vector<Permutation> common;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                        std::back_inserter(common));
  return PermGroup::from_elements(a.degree(), std::move(common));
}

bool check_semidirect(const PermGroup& group, const PermGroup& normal, const PermGroup& complement) {
  if (!is_subgroup(normal, group) || !is_subgroup(complement, group))
    throw Error(Errc::NotSubgroup, "semidirect check needs subgroups of the ambient group");
  return is_normal(normal, group) && intersection(normal, complement).is_trivial() &&
         normal.order() * complement.order() == group.order();
}

}  // namespace sierp
