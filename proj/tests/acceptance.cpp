// Prints one PASS/FAIL line per acceptance criterion. Exit status is the
// number of failing criteria.
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sierp/analysis.hpp"
#include "sierp/automorphism.hpp"
#include "sierp/io.hpp"
#include "sierp/metrics.hpp"
#include "sierp/named.hpp"
#include "sierp/planarity.hpp"
#include "sierp/product.hpp"
#include "sierp/report.hpp"
#include "sierp/scan.hpp"
#include "sierp/symmetry.hpp"

using namespace sierp;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::cout << "criterion " << id << " [" << (pass ? "PASS" : "FAIL") << "] " << name << ": " << detail << std::endl;
  if (!pass) ++failures;
}

// Runs a criterion body; a thrown exception counts as a failure.
void criterion(int id, const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
  try {
    auto [pass, detail] = body();
    report(id, name, pass, detail);
  } catch (const std::exception& e) {
    report(id, name, false, std::string("exception: ") + e.what());
  }
}

// Order and size of a chain listed outermost first, by the recursion
// |K_k| = |G_k|·|K_{k-1}|, ||K_k|| = |G_k|·||K_{k-1}|| + ||G_k||.
std::pair<std::uint64_t, std::uint64_t> chain_counts(const std::vector<Graph>& outermost_first) {
  std::uint64_t order = 1, size = 0;
  for (auto it = outermost_first.rbegin(); it != outermost_first.rend(); ++it) {
    const auto n = static_cast<std::uint64_t>(it->order()), m = static_cast<std::uint64_t>(it->size());
    size = it == outermost_first.rbegin() ? m : n * size + m;
    order *= n;
  }
  return {order, size};
}

struct Pair {
  Graph g, h;
  std::vector<Vertex> f;
};

std::vector<Pair> random_pairs(std::mt19937_64& rng, int count) {
  std::vector<Pair> out;
  for (int i = 0; i < count; ++i) {
    const int ng = 1 + static_cast<int>(rng() % 8), nh = 1 + static_cast<int>(rng() % 8);
    // mix connected and arbitrary graphs so both sides of the equivalence occur
    Graph g = rng() % 2 ? oracle::random_connected_graph(rng, ng, 0.3) : oracle::random_graph(rng, ng, 0.35);
    Graph h = rng() % 2 ? oracle::random_connected_graph(rng, nh, 0.3) : oracle::random_graph(rng, nh, 0.35);
    auto f = oracle::random_map(rng, ng, nh);
    out.push_back({std::move(g), std::move(h), std::move(f)});
  }
  return out;
}

Graph star_centre_2() { return Graph({"1", "2", "3", "4"}, {{0, 1}, {1, 2}, {1, 3}}); }

Graph k33_odd_even() {
  std::vector<Edge> e;
  for (int a : {0, 2, 4})
    for (int b : {1, 3, 5}) e.emplace_back(a, b);
  return Graph::with_indices(6, e, true);
}

// The 16-cycle of C4 x (2K3+e) moved back two places, pendants following their neighbours.
std::optional<Permutation> shifted_cycle(const ProductResult& p) {
  const std::vector<std::string> cycle{"14", "15", "16", "12", "21", "26", "25", "23",
                                       "32", "36", "35", "34", "43", "45", "46", "41"};
  const Graph& k = p.graph;
  std::vector<Vertex> img(static_cast<std::size_t>(k.order()), -1);
  std::vector<char> on_cycle(static_cast<std::size_t>(k.order()), 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    img[static_cast<std::size_t>(k.index_of(cycle[i]))] = k.index_of(cycle[(i + cycle.size() - 2) % cycle.size()]);
    on_cycle[static_cast<std::size_t>(k.index_of(cycle[i]))] = 1;
  }
  for (Vertex v = 0; v < k.order(); ++v) {
    if (on_cycle[static_cast<std::size_t>(v)]) continue;
    const auto& nb = k.neighbors(v);
    if (nb.size() != 2) return std::nullopt;
    for (Vertex w = 0; w < k.order(); ++w)
      if (!on_cycle[static_cast<std::size_t>(w)] && k.has_edge(w, img[static_cast<std::size_t>(nb[0])]) &&
          k.has_edge(w, img[static_cast<std::size_t>(nb[1])]))
        img[static_cast<std::size_t>(v)] = w;
  }
  Permutation perm(img);
  return perm;
}

}  // namespace

int main() {
  std::mt19937_64 rng(20261016);

  criterion(1, "counting", [&]() -> std::pair<bool, std::string> {
    const auto start = Clock::now();
    int bad = 0;
    for (const auto& p : random_pairs(rng, 200)) {
      const ProductResult r = sierpinski_product(p.g, p.h, VertexMap(p.g, p.h, p.f));
      const auto expected_edges = oracle::product_edges(p.g, p.h, p.f);
      const bool ok = r.graph.order() == p.g.order() * p.h.order() &&
                      r.graph.size() == p.h.size() * p.g.order() + p.g.size() &&
                      static_cast<std::size_t>(r.graph.size()) == expected_edges.size();
      bad += !ok;
    }
    int bad_chains = 0;
    for (int i = 0; i < 100; ++i) {
      std::vector<Graph> fs;
      for (int k = 0; k < 3; ++k) fs.push_back(oracle::random_graph(rng, 1 + static_cast<int>(rng() % 5), 0.4));
      ChainSpec spec{fs,
                     {VertexMap(fs[0], fs[1], oracle::random_map(rng, fs[0].order(), fs[1].order())),
                      VertexMap(fs[1], fs[2], oracle::random_map(rng, fs[1].order(), fs[2].order()))},
                     "."};
      const ProductResult r = chain_product(spec);
      const auto [order, size] = chain_counts(fs);
      oracle::ChainOracle o{fs, {spec.maps[0].table(), spec.maps[1].table()}};
      const bool ok = static_cast<std::uint64_t>(r.graph.order()) == order &&
                      static_cast<std::uint64_t>(r.graph.size()) == size && o.labelled_edges(".").size() == size &&
                      predicted_counts(spec) == Counts{order, size};
      bad_chains += !ok;
    }
    const double t = seconds_since(start);
    std::ostringstream d;
    d << "200 pairs, " << bad << " mismatches; 100 chains, " << bad_chains << " mismatches; " << t << " s";
    return {bad == 0 && bad_chains == 0 && t < 10.0, d.str()};
  });

  criterion(2, "connectivity iff", [&]() -> std::pair<bool, std::string> {
    std::mt19937_64 same(20261016);  // same corpus as criterion 1
    int bad = 0, connected = 0;
    for (const auto& p : random_pairs(same, 200)) {
      const ProductResult r = sierpinski_product(p.g, p.h, VertexMap(p.g, p.h, p.f));
      const bool lhs = oracle::dfs_connected(r.graph) && is_connected(r.graph);
      const bool rhs = oracle::dfs_connected(p.g) && oracle::dfs_connected(p.h);
      bad += lhs != rhs;
      connected += lhs;
    }
    std::ostringstream d;
    d << "200 pairs (" << connected << " connected products), " << bad << " exceptions";
    return {bad == 0, d.str()};
  });

  criterion(3, "self-product planarity rule", [&]() -> std::pair<bool, std::string> {
    const auto start = Clock::now();
    const Graph k4 = complete_graph(4);
    int graphs = 0;
    std::vector<std::string> exceptions;
    for (int n = 1; n <= 6; ++n)
      for (const Graph& g : connected_graphs(n)) {
        ++graphs;
        const auto verdict = product_planarity(g, g, VertexMap::identity(g, g)).verdict;
        const bool planar = verdict.planar;
        if (planar && !oracle::euler_planar_rotation(sierpinski_product(g, g, VertexMap::identity(g, g)).graph,
                                                     verdict.embedding.around))
          throw std::logic_error("planar verdict without a valid embedding for " + emit_graph6(g));
        const bool outer = oracle::outerplanar_by_minors(g);
        const bool predicted = outer || (g.order() == 4 && oracle::brute_isomorphic(g, k4));
        if (planar != predicted)
          exceptions.push_back(emit_graph6(g) + (planar ? " planar (embedding checked)" : " non-planar") + (oracle::has_cut_vertex(g) ? " (cut vertex)" : ""));
      }
    const Graph k23 = complete_bipartite(2, 3);
    const bool k23_nonplanar = !product_planarity(k23, k23, VertexMap::identity(k23, k23)).verdict.planar;
    const bool k4_planar = product_planarity(k4, k4, VertexMap::identity(k4, k4)).verdict.planar;
    const double t = seconds_since(start);
    std::ostringstream d;
    d << graphs << " connected graphs; K2,3 non-planar " << (k23_nonplanar ? "yes" : "NO") << "; K4 planar "
      << (k4_planar ? "yes" : "NO") << "; " << exceptions.size() << " exceptions";
    for (const auto& e : exceptions) d << " [" << e << "]";
    d << "; " << t << " s";
    return {exceptions.empty() && k23_nonplanar && k4_planar && t < 60.0, d.str()};
  });

  criterion(4, "low-degree sufficient condition", [&]() -> std::pair<bool, std::string> {
    int instances = 0, planar = 0;
    while (instances < 50) {
      Graph g = oracle::random_connected_graph(rng, 1 + static_cast<int>(rng() % 7), 0.25);
      Graph h = oracle::random_connected_graph(rng, 1 + static_cast<int>(rng() % 7), 0.25);
      if (g.max_degree() > 3 || !oracle::planar_by_minors(g) || !oracle::outerplanar_by_minors(h)) continue;
      ++instances;
      const ProductResult r = sierpinski_product(g, h, VertexMap(g, h, oracle::random_map(rng, g.order(), h.order())));
      const PlanarityVerdict v = is_planar(r.graph);
      planar += v.planar && oracle::euler_planar_rotation(r.graph, v.embedding.around);
    }
    std::ostringstream d;
    d << planar << "/" << instances << " products planar with a checked embedding";
    return {planar == instances, d.str()};
  });

  criterion(5, "diameters", [&]() -> std::pair<bool, std::string> {
    const auto start = Clock::now();
    const Graph p5 = path_graph(5), p6 = path_graph(6);
    const ProductResult paths = sierpinski_product(p5, p6, VertexMap(p5, p6, {0, 0, 5, 5, 0}));
    const auto dp = diameter(paths.graph);
    bool ok = dp == 29 && oracle::fw_diameter(paths.graph) == 29;
    std::ostringstream d;
    d << "diam(P5 x P6) = " << (dp ? *dp : -1) << "; S3^n:";
    for (int n = 1; n <= 4; ++n) {
      const auto ds = diameter(generalized_sierpinski(complete_graph(3), n).graph);
      d << " " << (ds ? *ds : -1);
      ok = ok && ds == (1 << n) - 1;
    }
    int dominated = 0;
    for (int i = 0; i < 100; ++i) {
      std::vector<Graph> fs;
      for (int k = 0; k < 3; ++k) fs.push_back(oracle::random_connected_graph(rng, 1 + static_cast<int>(rng() % 5), 0.3));
      ChainSpec spec{fs,
                     {VertexMap(fs[0], fs[1], oracle::random_map(rng, fs[0].order(), fs[1].order())),
                      VertexMap(fs[1], fs[2], oracle::random_map(rng, fs[1].order(), fs[2].order()))},
                     "."};
      std::vector<std::int64_t> diams;
      for (auto it = fs.rbegin(); it != fs.rend(); ++it) diams.push_back(*oracle::fw_diameter(*it));
      dominated += *oracle::fw_diameter(chain_product(spec).graph) <= diameter_bound(diams);
    }
    int agree = 0;
    for (int i = 0; i < 1000; ++i) {
      std::vector<std::int64_t> ds(1 + rng() % 8);
      for (auto& x : ds) x = static_cast<std::int64_t>(rng() % 6);
      // sum over nonempty subsets of the product of chosen entries
      std::int64_t closed = 0;
      for (std::uint32_t mask = 1; mask < (1u << ds.size()); ++mask) {
        std::int64_t prod = 1;
        for (std::size_t k = 0; k < ds.size(); ++k)
          if (mask & (1u << k)) prod *= ds[k];
        closed += prod;
      }
      agree += diameter_bound_recursive(ds) == closed && diameter_bound_closed_form(ds) == closed;
    }
    const double t = seconds_since(start);
    d << "; bound dominates " << dominated << "/100 chains; recursion = closed form " << agree << "/1000; " << t << " s";
    return {ok && dominated == 100 && agree == 1000 && t < 30.0, d.str()};
  });

  criterion(6, "symmetry orders", [&]() -> std::pair<bool, std::string> {
    const auto start = Clock::now();
    const Graph k3 = complete_graph(3), k4 = complete_graph(4), c4 = cycle_graph(4);
    const auto s32 = oracle::backtrack_automorphisms(generalized_sierpinski(k3, 2).graph).size();
    const BinaryProduct cc = BinaryProduct::make(c4, c4, VertexMap::identity(c4, c4));
    const auto cc_brute = oracle::backtrack_automorphisms(cc.product.graph).size();
    const DecompositionReport dec = verify_decomposition(c4, VertexMap::identity(c4, c4));
    const BinaryProduct kk = BinaryProduct::make(k3, k4, VertexMap::identity(k3, k4));
    std::size_t kk_all = 0, kk_respecting = 0;
    for (const auto& a : oracle::backtrack_automorphisms(kk.product.graph)) {
      ++kk_all;
      bool ok = true;
      for (const auto& e : kk.product.inner_edges) ok = ok && kk.product.copy_of(a[e.u]) == kk.product.copy_of(a[e.v]);
      kk_respecting += ok;
    }
    const bool k4_edges_on_short_cycles = is_locally_injective(k3, kk.f);
    const double t = seconds_since(start);
    std::ostringstream d;
    d << "|Aut(S3^2)| = " << s32 << "; C4xC4: brute " << cc_brute << ", full/tilde/barA/hatB = " << dec.full_order << "/"
      << dec.tilde_order << "/" << dec.bar_a_order << "/" << dec.hat_b_order << ", decomposition "
      << (dec.passed() ? "passes" : "fails") << "; K3xK4: " << kk_respecting << "/" << kk_all
      << " automorphisms respect the partition; " << t << " s";
    const bool pass = s32 == 6 && cc_brute == 128 && dec.full_order == 128 && dec.tilde_order == 128 &&
                      dec.bar_a_order == 8 && dec.hat_b_order == 16 && dec.passed() && kk_all == kk_respecting &&
                      kk_all == tilde_a(kk).tilde.order() && k4_edges_on_short_cycles && t < 120.0;
    return {pass, d.str()};
  });

  criterion(7, "partition-breaking automorphism", [&]() -> std::pair<bool, std::string> {
    const Graph c4 = cycle_graph(4), h = two_triangles_bridged();
    const BinaryProduct bp = BinaryProduct::make(c4, h, VertexMap::identity(c4, h), "");
    const auto rot = shifted_cycle(bp.product);
    if (!rot || !is_automorphism(bp.product.graph, *rot)) return {false, "rotation is not an automorphism"};
    const Graph& k = bp.product.graph;
    const Edge inner(k.index_of("16"), k.index_of("15"));
    const Edge image((*rot)(inner.u), (*rot)(inner.v));
    const bool ok = bp.product.classify(inner) == EdgeClass::Inner &&
                    image == Edge(k.index_of("14"), k.index_of("41")) &&
                    bp.product.classify(image) == EdgeClass::Connecting && !respects_partition(*rot, bp.product);
    return {ok, "inner {16,15} -> {" + k.label(image.u) + "," + k.label(image.v) + "} (" +
                    (bp.product.classify(image) == EdgeClass::Connecting ? "connecting" : "inner") + ")"};
  });

  criterion(8, "explicit lifts", [&]() -> std::pair<bool, std::string> {
    int accepted = 0;
    std::string notes;
    auto check = [&](const BinaryProduct& bp, const LiftSpec& spec, const std::string& expected) {
      const auto psi = make_psi(bp, spec);
      const bool ok = psi && respects_partition(*psi, bp.product) &&
                      to_cycle_string(*psi, bp.product.graph) == expected;
      accepted += ok;
      notes += ok ? " ok" : " rejected";
    };
    const Graph k3 = complete_graph(3), h = k33_odd_even(), s = star_centre_2(), c4 = cycle_graph(4);
    check(BinaryProduct::make(k3, h, VertexMap::from_pairs(k3, h, {{"1", "1"}, {"2", "3"}, {"3", "5"}}), ""),
          LiftSpec{parse_cycles("(1 2 3)", k3),
                   {parse_cycles("(1 3 5)(2 4 6)", h), parse_cycles("(1 3 5)(2 6 4)", h), parse_cycles("(1 3 5)", h)}},
          "(11 23 35)(12 24 32)(13 25 31)(14 26 34)(15 21 33)(16 22 36)");
    check(BinaryProduct::make(s, s, VertexMap(s, s, parse_cycles("(1 2 3 4)", s).images()), ""),
          LiftSpec::constant(parse_cycles("(3 4)", s), parse_cycles("(1 4)", s), 4),
          "(11 14)(21 24)(31 44)(32 42)(33 43)(34 41)");
    check(BinaryProduct::make(c4, s, VertexMap::from_pairs(c4, s, {{"1", "2"}, {"2", "2"}, {"3", "4"}, {"4", "3"}}), ""),
          LiftSpec::constant(parse_cycles("(1 2)(3 4)", c4), parse_cycles("(3 4)", s), 4),
          "(11 21)(12 22)(13 24)(14 23)(31 41)(32 42)(33 44)(34 43)");
    return {accepted == 3, "three examples:" + notes};
  });

  criterion(9, "non-unique factorisation", [&]() -> std::pair<bool, std::string> {
    const Graph c4 = cycle_graph(4), h = two_triangles_bridged(), c8 = cycle_graph(8), c3 = cycle_graph(3);
    const ProductResult a = sierpinski_product(c4, h, VertexMap::identity(c4, h), "");
    const ProductResult b = sierpinski_product(c8, c3, VertexMap(c8, c3, {0, 0, 1, 1, 0, 0, 1, 1}), "");
    const auto iso = find_isomorphism(a.graph, b.graph);
    if (!iso) return {false, "no isomorphism found"};
    // check the witness edge by edge
    const auto ea = a.graph.edges();
    bool ok = a.graph.size() == b.graph.size();
    for (const Edge& e : ea) ok = ok && b.graph.has_edge((*iso)[static_cast<std::size_t>(e.u)], (*iso)[static_cast<std::size_t>(e.v)]);
    std::string witness;
    for (const auto& [x, y] : label_bijection(a.graph, b.graph, *iso)) witness += " " + x + "->" + y;
    return {ok, "witness:" + witness};
  });

  criterion(10, "conjecture scan", [&]() -> std::pair<bool, std::string> {
    ScanOptions opt;
    opt.max_n = 4;
    opt.seed = 7;
    const ScanReport first = conjecture_scan(opt);
    const std::string a = scan_json(first).dump(), b = scan_json(conjecture_scan(opt)).dump();
    const bool exhaustive = first.partition.sampled_pairs == 0 && first.semidirect.sampled_pairs == 0;
    std::size_t partition = 0, semidirect = 0;
    std::set<std::string> pairs;
    for (const auto& v : first.violations) {
      (v.conjecture == "partition" ? partition : semidirect) += 1;
      pairs.insert(v.g_graph6 + "/" + v.h_graph6);
    }
    std::ostringstream d;
    d << "partition: " << first.partition.instances << " instances, " << partition << " counterexamples; semidirect: "
      << first.semidirect.instances << " instances, " << semidirect << " counterexamples";
    for (const auto& p : pairs) d << " [" << p << "]";
    d << "; exhaustive " << (exhaustive ? "yes" : "no") << "; overflows " << first.overflows.size()
      << "; byte-stable " << (a == b ? "yes" : "no");
    return {first.violations.empty() && first.overflows.empty() && exhaustive && a == b, d.str()};
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures;
}
