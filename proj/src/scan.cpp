#include "sierp/scan.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "sierp/automorphism.hpp"
#include "sierp/error.hpp"
#include "sierp/io.hpp"
#include "sierp/metrics.hpp"
#include "sierp/named.hpp"
#include "sierp/symmetry.hpp"

namespace sierp {

std::vector<Graph> connected_graphs(int n, const SearchLimits& limits) {
  if (n < 1) return {};
  if (n > 7) throw Error(Errc::Overflow, "connected graph enumeration limited to 7 vertices");
  std::vector<Edge> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  using Key = std::tuple<int, std::vector<int>>;
  std::map<Key, std::vector<std::size_t>> buckets;
  std::vector<Graph> reps;
  const std::uint64_t masks = 1ULL << slots.size();
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    if (static_cast<int>(__builtin_popcountll(mask)) < n - 1) continue;
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1U) edges.push_back(slots[k]);
    Graph g = Graph::with_indices(n, edges, true);
    if (!is_connected(g)) continue;
    std::vector<int> degrees;
    for (Vertex v = 0; v < n; ++v) degrees.push_back(g.degree(v));
    std::sort(degrees.begin(), degrees.end());
    auto& bucket = buckets[Key{g.size(), degrees}];
    bool seen = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t i) { return is_isomorphic(reps[i], g, limits); });
    if (!seen) {
      bucket.push_back(reps.size());
      reps.push_back(std::move(g));
    }
  }
  return reps;
}

std::vector<std::vector<Vertex>> all_maps(int order_g, int order_h) {
  std::vector<std::vector<Vertex>> out;
  if (order_h == 0) {
    if (order_g == 0) out.emplace_back();
    return out;
  }
  std::vector<Vertex> cur(static_cast<std::size_t>(order_g), 0);
  while (true) {
    out.push_back(cur);
    int i = order_g - 1;
    for (; i >= 0; --i) {
      if (++cur[static_cast<std::size_t>(i)] < order_h) break;
      cur[static_cast<std::size_t>(i)] = 0;
    }
    if (i < 0) return out;
  }
}

std::vector<std::vector<Vertex>> locally_injective_maps(const Graph& g, int order_h, std::size_t cap) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur(static_cast<std::size_t>(g.order()), -1);
  auto ok = [&](Vertex v) {
    // v's image must differ from every assigned co-neighbor's image.
    for (Vertex u : g.neighbors(v))
      for (Vertex w : g.neighbors(u))
        if (w != v && cur[static_cast<std::size_t>(w)] == cur[static_cast<std::size_t>(v)]) return false;
    return true;
  };
  auto rec = [&](auto&& self, Vertex v) -> void {
    if (out.size() >= cap) return;
    if (v == g.order()) {
      out.push_back(cur);
      return;
    }
    for (Vertex h = 0; h < order_h; ++h) {
      cur[static_cast<std::size_t>(v)] = h;
      if (ok(v)) self(self, v + 1);
      if (out.size() >= cap) break;
    }
    cur[static_cast<std::size_t>(v)] = -1;
  };
  rec(rec, 0);
  return out;
}

namespace {

std::uint64_t power_capped(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > cap) return cap + 1;
  }
  return r;
}

std::vector<std::vector<Vertex>> maps_for_pair(const Graph& g, const Graph& h, const ScanOptions& opt,
                                               std::mt19937_64& rng, bool& exhaustive) {
  const std::uint64_t total = power_capped(static_cast<std::uint64_t>(h.order()), g.order(), opt.exhaustive_limit);
  exhaustive = total <= opt.exhaustive_limit;
  if (exhaustive) return all_maps(g.order(), h.order());
  std::set<std::vector<Vertex>> chosen;
  for (std::size_t i = 0; i < opt.sample_size; ++i) {
    std::vector<Vertex> m;
    for (Vertex v = 0; v < g.order(); ++v) m.push_back(static_cast<Vertex>(rng() % static_cast<std::uint64_t>(h.order())));
    chosen.insert(std::move(m));
  }
  for (auto& m : locally_injective_maps(g, h.order(), opt.locally_injective_cap)) chosen.insert(std::move(m));
  return {chosen.begin(), chosen.end()};
}

std::vector<std::vector<Vertex>> all_bijections(int n) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<Vertex>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

ScanReport conjecture_scan(const ScanOptions& options) {
  ScanReport report;
  report.options = options;
  std::mt19937_64 rng(options.seed);

  std::vector<Graph> connected;
  for (int n = 1; n <= options.max_n; ++n)
    for (auto& g : connected_graphs(n, options.limits)) connected.push_back(std::move(g));
  std::vector<const Graph*> biconnected;
  for (const auto& g : connected)
    if (is_biconnected(g)) biconnected.push_back(&g);

  auto record_overflow = [&](const char* which, const Graph& g, const Graph& h, const std::vector<Vertex>& m,
                             const Error& e) {
    report.overflows.push_back({which, emit_graph6(g), emit_graph6(h), m, e.what()});
  };

  for (const Graph* g : biconnected) {
    for (const Graph* h : biconnected) {
      ++report.partition.graph_pairs;
      bool exhaustive = false;
      auto maps = maps_for_pair(*g, *h, options, rng, exhaustive);
      ++(exhaustive ? report.partition.exhaustive_pairs : report.partition.sampled_pairs);
      for (const auto& m : maps) {
        ++report.partition.instances;
        try {
          const BinaryProduct bp = BinaryProduct::make(*g, *h, VertexMap(*g, *h, m));
          const PermGroup full = automorphisms(bp.product.graph, options.limits);
          std::size_t tilde = 0;
          std::optional<Permutation> breaking;
          for (const auto& p : full.elements()) {
            if (respects_partition(p, bp.product)) ++tilde;
            else if (!breaking) breaking = p;
          }
          if (breaking) {
            ScanViolation v{"partition", emit_graph6(*g), emit_graph6(*h), m, full.order(), tilde, 0, 0,
                            to_cycle_string(*breaking, bp.product.graph)};
            report.violations.push_back(std::move(v));
          }
        } catch (const Error& e) {
          if (e.code() != Errc::Overflow) throw;
          record_overflow("partition", *g, *h, m, e);
        }
      }
    }
  }

  for (const auto& g : connected) {
    for (const auto& h : connected) {
      if (g.order() != h.order()) continue;
      ++report.semidirect.graph_pairs;
      const bool exhaustive = power_capped(static_cast<std::uint64_t>(g.order()), g.order(), options.exhaustive_limit) <=
                              options.exhaustive_limit;
      ++(exhaustive ? report.semidirect.exhaustive_pairs : report.semidirect.sampled_pairs);
      std::vector<std::vector<Vertex>> maps;
      if (exhaustive) {
        maps = all_bijections(g.order());
      } else {
        std::set<std::vector<Vertex>> chosen;
        for (std::size_t i = 0; i < options.sample_size; ++i) {
          std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
          for (int k = 0; k < g.order(); ++k) perm[static_cast<std::size_t>(k)] = k;
          for (int k = g.order() - 1; k > 0; --k)
            std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(k + 1))]);
          chosen.insert(std::move(perm));
        }
        maps.assign(chosen.begin(), chosen.end());
      }
      for (const auto& m : maps) {
        ++report.semidirect.instances;
        try {
          const BinaryProduct bp = BinaryProduct::make(g, h, VertexMap(g, h, m));
          const PartitionedAut groups = tilde_a(bp, options.limits);
          const PermGroup& ba = *groups.bar_a;
          const bool ok = is_subgroup(ba, groups.tilde) && check_semidirect(groups.tilde, groups.hat_b, ba);
          if (!ok) {
            std::string detail;
            if (!is_normal(groups.hat_b, groups.tilde)) detail = "B̂ not normal in Ã";
            else if (!intersection(ba, groups.hat_b).is_trivial()) detail = "Ā ∩ B̂ nontrivial";
            else detail = "|Ā|·|B̂| != |Ã|";
            report.violations.push_back({"semidirect", emit_graph6(g), emit_graph6(h), m, groups.full.order(),
                                         groups.tilde.order(), groups.hat_b.order(), ba.order(), detail});
          }
        } catch (const Error& e) {
          if (e.code() != Errc::Overflow) throw;
          record_overflow("semidirect", g, h, m, e);
        }
      }
    }
  }

  {
    const Graph g = cycle_graph(4);
    const Graph h = two_triangles_bridged();
    const BinaryProduct bp = BinaryProduct::make(g, h, VertexMap::identity(g, h));
    const PermGroup full = automorphisms(bp.product.graph, options.limits);
    SanityCase sc{"C4 x 2K3+e, f = id", is_biconnected(g), is_biconnected(h), full.order(), 0, ""};
    for (const auto& p : full.elements()) {
      if (respects_partition(p, bp.product)) ++sc.tilde_order;
      else if (sc.breaking_automorphism.empty()) sc.breaking_automorphism = to_cycle_string(p, bp.product.graph);
    }
    report.sanity.push_back(std::move(sc));
  }
  return report;
}

}  // namespace sierp
