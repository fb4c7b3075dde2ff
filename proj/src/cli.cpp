#include "sierp/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "sierp/analysis.hpp"
#include "sierp/automorphism.hpp"
#include "sierp/error.hpp"
#include "sierp/io.hpp"
#include "sierp/metrics.hpp"
#include "sierp/named.hpp"
#include "sierp/planarity.hpp"
#include "sierp/product.hpp"
#include "sierp/report.hpp"
#include "sierp/scan.hpp"
#include "sierp/symmetry.hpp"

namespace sierp::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Factor {
  std::string token;
  std::string source;  // "named" or "file"
  Graph graph;
};

Factor load_factor(const std::string& token) {
  if (auto g = named_graph(token)) return {token, "named", std::move(*g)};
  if (!std::filesystem::is_regular_file(token))
    throw Error(Errc::InvalidArgument, "'" + token + "' is neither a built-in graph nor a readable file");
  const std::string text = read_file(token);
  const auto ext = std::filesystem::path(token).extension().string();
  if (ext == ".g6" || ext == ".graph6") {
    std::string line = text.substr(0, text.find_first_of("\r\n"));
    return {token, "file", parse_graph6(line)};
  }
  return {token, "file", parse_edge_list(text)};
}

VertexMap load_map(const std::string& token, const Graph& source, const Graph& target) {
  if (token == "id") return VertexMap::identity(source, target);
  if (token.rfind("mod", 0) == 0 && token.size() > 3 &&
      token.find_first_not_of("0123456789", 3) == std::string::npos)
    return VertexMap::modulo(source, target, std::stoi(token.substr(3)));
  if (!std::filesystem::is_regular_file(token))
    throw Error(Errc::InvalidArgument, "map '" + token + "' is neither id, mod<k> nor a readable file");
  return parse_vertex_map(read_file(token), source, target);
}

struct Common {
  std::vector<std::string> factors;
  std::string map;
  std::vector<std::string> maps;  // f_1 first
  std::string generalized;
  int n = 0;
  std::string separator = ".";
  bool no_timings = false;

  void attach(CLI::App* app) {
    app->add_option("factors", factors, "Factor graphs, outermost first: a built-in name (K4, C5, P6, K2,3, house, 2K3+e) or a file");
    app->add_option("--map", map, "Map for a two-factor product: id, mod<k> or a map file");
    app->add_option("--maps", maps, "Maps for a chain, f_1 first (f_i maps factor i+1 into factor i, counting from the innermost)");
    app->add_option("--generalized", generalized, "Build S_G^n from this graph");
    app->add_option("--n", n, "Exponent for --generalized")->check(CLI::PositiveNumber);
    app->add_option("--separator", separator, "Separator between label components");
    app->add_flag("--no-timings", no_timings, "Omit timings from the JSON report");
  }
};

// Factors innermost first inside the spec's chain order: spec.factors is
// outermost first, spec.maps is f_{m-1} first.
struct Setup {
  std::vector<Factor> factors;  // outermost first
  std::optional<ChainSpec> chain;
  std::optional<BinaryProduct> binary;
  std::optional<ProductResult> product;

  const Graph& graph() const { return product ? product->graph : factors.front().graph; }
};

Setup make_setup(const Common& c) {
  Setup s;
  if (!c.generalized.empty()) {
    if (!c.factors.empty() || !c.map.empty() || !c.maps.empty())
      throw Error(Errc::InvalidArgument, "--generalized takes no factors or maps");
    if (c.n < 1) throw Error(Errc::InvalidArgument, "--generalized needs --n >= 1");
    Factor base = load_factor(c.generalized);
    for (int i = 0; i < c.n; ++i) s.factors.push_back(base);
    ChainSpec spec;
    spec.separator = c.separator;
    for (int i = 0; i < c.n; ++i) spec.factors.push_back(base.graph);
    for (int i = 0; i + 1 < c.n; ++i) spec.maps.push_back(VertexMap::identity(base.graph, base.graph));
    s.chain = std::move(spec);
  } else {
    if (c.factors.empty()) throw Error(Errc::InvalidArgument, "no factors given");
    for (const auto& t : c.factors) s.factors.push_back(load_factor(t));
    const std::size_t m = s.factors.size();
    if (m == 1) {
      if (!c.map.empty() || !c.maps.empty()) throw Error(Errc::ArityMismatch, "a single graph takes no map");
      return s;
    }
    std::vector<std::string> tokens = c.maps;
    if (tokens.empty()) tokens.assign(m - 1, c.map.empty() ? "id" : c.map);
    else if (!c.map.empty()) throw Error(Errc::InvalidArgument, "use either --map or --maps");
    if (tokens.size() != m - 1)
      throw Error(Errc::ArityMismatch, std::to_string(m) + " factors need " + std::to_string(m - 1) + " maps, got " +
                                           std::to_string(tokens.size()));
    ChainSpec spec;
    spec.separator = c.separator;
    for (const auto& f : s.factors) spec.factors.push_back(f.graph);
    // tokens[i] is f_{i+1}: V(G_{i+2}) -> V(G_{i+1}); factors are stored G_m first.
    for (std::size_t i = m - 1; i-- > 0;) {
      const Graph& src = spec.factors[m - 2 - i];
      const Graph& dst = spec.factors[m - 1 - i];
      spec.maps.push_back(load_map(tokens[i], src, dst));
    }
    if (m == 2) s.binary = BinaryProduct::make(spec.factors[0], spec.factors[1], spec.maps[0], c.separator);
    s.chain = std::move(spec);
  }
  s.product = s.binary ? s.binary->product : chain_product(*s.chain);
  return s;
}

class Report {
 public:
  Report(const std::vector<std::string>& args, const Common& c) : timings_(!c.no_timings) {
    json_["schema_version"] = kReportSchemaVersion;
    json_["command"] = args;
    json_["inputs"] = Json::array();
    json_["results"] = Json::object();
    json_["errors"] = Json::array();
    if (timings_) json_["timings_ms"] = Json::object();
  }

  void add_inputs(const Setup& s) {
    for (const auto& f : s.factors)
      json_["inputs"].push_back(Json{{"name", f.token},
                                     {"source", f.source},
                                     {"order", f.graph.order()},
                                     {"size", f.graph.size()},
                                     {"sha256", sha256_hex(emit_edge_list(f.graph))}});
  }

  // Runs `fn` for result `key`; library errors are recorded and make the run fail.
  void item(const std::string& key, const std::function<Json()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    try {
      json_["results"][key] = fn();
    } catch (const Error& e) {
      ok_ = false;
      json_["results"][key] = nullptr;
      json_["errors"].push_back(Json{{"item", key}, {"code", errc_name(e.code())}, {"message", e.what()}});
    }
    if (timings_)
      json_["timings_ms"][key] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }

  bool ok() const { return ok_; }
  Json& json() { return json_; }

 private:
  Json json_;
  bool timings_;
  bool ok_ = true;
};

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Json build_summary(const Setup& s) {
  if (!s.product) return graph_summary_json(s.graph());
  return product_json(*s.product, predicted_counts(*s.chain), s.factors.front().graph);
}

Json check_connectivity(const Setup& s) {
  Json factors = Json::array();
  bool all = true;
  for (const auto& f : s.factors) {
    const bool c = is_connected(f.graph);
    factors.push_back(c);
    all = all && c;
  }
  const bool connected = is_connected(s.graph());
  Json j{{"connected", connected}, {"components", component_count(s.graph())}};
  if (s.product) {
    j["factors_connected"] = std::move(factors);
    j["predicted"] = all;
    j["agrees"] = all == connected;
    j["tag"] = "connected-iff-factors-connected";
  }
  return j;
}

Json check_planarity(const Setup& s) {
  if (s.binary && is_connected(s.binary->g) && is_connected(s.binary->h)) {
    Json j = product_planarity_json(product_planarity(s.binary->g, s.binary->h, s.binary->f), s.graph());
    j["tag"] = "planarity-factor-conditions";
    return j;
  }
  Json j = planarity_json(is_planar(s.graph()), s.graph());
  j["outerplanar"] = is_outerplanar(s.graph());
  return j;
}

Json check_girth(const Setup& s) {
  Json factors = Json::array();
  for (const auto& f : s.factors) factors.push_back(optional_int(girth(f.graph)));
  Json j{{"girth", optional_int(girth(s.graph()))}};
  if (s.product) j["factor_girths"] = std::move(factors);
  if (s.binary) {
    const auto r = connecting_edge_cycle_check(s.binary->g, s.binary->h, s.binary->f, s.binary->product);
    j["connecting_edge_cycles"] = Json{{"locally_injective", r.locally_injective}, {"all_hold", r.all_hold}};
    j["tag"] = "connecting-edge-cycle-length";
  }
  return j;
}

Json check_diameter(const Setup& s) { return Json{{"diameter", optional_int(diameter(s.graph()))}}; }

Json check_bounds(const Setup& s, const std::vector<std::int64_t>& genus) {
  if (!s.product) throw Error(Errc::InvalidArgument, "bounds need a product");
  Json j = Json::object();
  std::vector<std::int64_t> diams;  // innermost first
  bool finite = true;
  for (auto it = s.factors.rbegin(); it != s.factors.rend(); ++it) {
    const auto d = diameter(it->graph);
    finite = finite && d.has_value();
    diams.push_back(d.value_or(0));
  }
  if (finite) {
    const auto bound = diameter_bound(diams);
    const auto measured = diameter(s.graph());
    j["diameter_bound"] = Json{{"factor_diameters_innermost_first", diams},
                               {"bound", bound},
                               {"measured", optional_int(measured)},
                               {"holds", measured && *measured <= bound},
                               {"tag", "diameter-bound"}};
  } else {
    j["diameter_bound"] = nullptr;
  }
  if (s.binary) {
    std::optional<std::pair<std::int64_t, std::int64_t>> gs;
    if (genus.size() == 2) gs = std::make_pair(genus[0], genus[1]);
    else if (!genus.empty()) throw Error(Errc::ArityMismatch, "--genus takes two values: genus(G) genus(H)");
    else if (is_planar(s.binary->g).planar && is_planar(s.binary->h).planar) gs = std::make_pair(0, 0);
    if (gs)
      j["genus_lower_bound"] = Json{{"genus_g", gs->first},
                                    {"genus_h", gs->second},
                                    {"bound", genus_lower_bound(gs->first, s.binary->g.order(), gs->second)},
                                    {"tag", "genus-lower-bound"}};
    else
      j["genus_lower_bound"] = nullptr;
  }
  return j;
}

std::vector<std::string> split_checks(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void emit(const Json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sierpinski graph products: construction, analysis and symmetry"};
  app.require_subcommand(1);

  Common build_c, analyze_c, autos_c;
  std::string out_format = "edgelist", output_path, phi_path;
  auto* build = app.add_subcommand("build", "Construct a product and write it out");
  build_c.attach(build);
  build->add_option("--out", out_format, "Output format")->check(CLI::IsMember({"edgelist", "graph6", "dot", "json"}));
  build->add_option("-o,--output", output_path, "Write the graph here instead of stdout");
  build->add_option("--phi", phi_path, "Write the embedding phi as a map file");

  std::string checks = "connectivity,planarity,girth,diameter,bounds";
  std::vector<std::int64_t> genus;
  auto* analyze = app.add_subcommand("analyze", "Structural checks on a graph or product");
  analyze_c.attach(analyze);
  analyze->add_option("--checks", checks, "Comma-separated: connectivity,planarity,girth,diameter,bounds");
  analyze->add_option("--genus", genus, "Genus of G and of H, for the genus lower bound");

  bool decompose = false;
  int scan_max = 0;
  std::uint64_t seed = 0;
  auto* autos = app.add_subcommand("autos", "Automorphism groups of a product");
  autos_c.attach(autos);
  autos->add_flag("--decompose", decompose, "Check the semidirect decomposition (G = H, f an automorphism)");
  autos->add_option("--scan-max", scan_max, "Run the conjecture scan up to this many vertices")->check(CLI::Range(1, 7));
  autos->add_option("--seed", seed, "Seed for sampled maps in the scan");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (build->parsed()) {
      const Setup s = make_setup(build_c);
      if (!s.product) throw Error(Errc::InvalidArgument, "build needs at least two factors or --generalized");
      if (!phi_path.empty()) {
        std::ofstream phi(phi_path);
        const Graph& outer = s.factors.front().graph;
        for (Vertex g = 0; g < outer.order(); ++g)
          phi << outer.label(g) << ' ' << s.product->graph.label(s.product->phi[static_cast<std::size_t>(g)]) << '\n';
      }
      std::string text;
      if (out_format == "json") {
        Report r(args, build_c);
        r.add_inputs(s);
        r.item("product", [&] {
          Json j = build_summary(s);
          j["graph"] = graph_json(s.product->graph);
          return j;
        });
        text = r.json().dump(2) + "\n";
      } else if (out_format == "graph6") {
        text = emit_graph6(s.product->graph) + "\n";
      } else if (out_format == "dot") {
        text = emit_dot(*s.product);
      } else {
        text = emit_edge_list(s.product->graph);
      }
      if (output_path.empty()) {
        out << text;
      } else {
        std::ofstream(output_path, std::ios::binary) << text;
        err << s.product->graph.order() << " vertices, " << s.product->graph.size() << " edges written to "
            << output_path << '\n';
      }
      return 0;
    }

    if (analyze->parsed()) {
      const Setup s = make_setup(analyze_c);
      Report r(args, analyze_c);
      r.add_inputs(s);
      r.item("graph", [&] { return build_summary(s); });
      for (const auto& c : split_checks(checks)) {
        if (c == "connectivity") r.item(c, [&] { return check_connectivity(s); });
        else if (c == "planarity") r.item(c, [&] { return check_planarity(s); });
        else if (c == "girth") r.item(c, [&] { return check_girth(s); });
        else if (c == "diameter") r.item(c, [&] { return check_diameter(s); });
        else if (c == "bounds") r.item(c, [&] { return check_bounds(s, genus); });
        else throw Error(Errc::InvalidArgument, "unknown check '" + c + "'");
      }
      emit(r.json(), out);
      return r.ok() ? 0 : 1;
    }

    // autos
    const SearchLimits limits = SearchLimits::from_env();
    Report r(args, autos_c);
    const bool has_input = !autos_c.factors.empty() || !autos_c.generalized.empty();
    std::optional<Setup> s;
    if (has_input) {
      s = make_setup(autos_c);
      r.add_inputs(*s);
      r.item("graph", [&] { return build_summary(*s); });
    } else if (scan_max == 0) {
      throw Error(Errc::InvalidArgument, "autos needs factors or --scan-max");
    }
    if (s && !s->binary) {
      r.item("automorphisms", [&] {
        const auto summary = automorphism_generators(s->graph(), limits);
        Json gens = Json::array();
        for (const auto& p : summary.generators) gens.push_back(to_cycle_string(p, s->graph()));
        return Json{{"full", summary.order}, {"generators", gens}};
      });
    }
    if (s && s->binary) {
      const BinaryProduct& bp = *s->binary;
      r.item("groups", [&] {
        const PartitionedAut groups = tilde_a(bp, limits);
        Json j{{"full", groups.full.order()},
               {"tilde", groups.tilde.order()},
               {"hat_b", groups.hat_b.order()},
               {"bar_a", groups.bar_a ? Json(groups.bar_a->order()) : Json(nullptr)},
               {"tilde_is_full", groups.tilde.order() == groups.full.order()}};
        const auto breaking = partition_breaking_automorphism(groups);
        j["partition_breaking_automorphism"] = breaking ? Json(to_cycle_string(*breaking, bp.product.graph)) : Json(nullptr);
        if (breaking) {
          for (const Edge& e : bp.product.inner_edges) {
            const Edge image((*breaking)(e.u), (*breaking)(e.v));
            if (bp.product.classify(image) == EdgeClass::Connecting) {
              j["inner_edge_sent_to_connecting"] = Json{
                  {"inner", {bp.product.graph.label(e.u), bp.product.graph.label(e.v)}},
                  {"image", {bp.product.graph.label(image.u), bp.product.graph.label(image.v)}}};
              break;
            }
          }
        }
        return j;
      });
      if (decompose) {
        r.item("decomposition", [&] {
          if (!(bp.g == bp.h)) throw Error(Errc::InvalidArgument, "decomposition needs G = H");
          return decomposition_json(verify_decomposition(bp.g, bp.f, limits));
        });
      }
    }
    if (scan_max > 0) {
      r.item("scan", [&] {
        ScanOptions opt;
        opt.max_n = scan_max;
        opt.seed = seed;
        opt.limits = limits;
        return scan_json(conjecture_scan(opt));
      });
    }
    emit(r.json(), out);
    return r.ok() ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace sierp::cli
