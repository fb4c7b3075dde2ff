#include "sierp/automorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "sierp/error.hpp"
#include "sierp/metrics.hpp"

namespace sierp {

namespace {

// Refines the disjoint union of the given graphs so that color ids are
// comparable across them.
std::vector<std::vector<int>> joint_refinement(const std::vector<const Graph*>& graphs) {
  std::vector<std::vector<int>> colors;
  for (const Graph* g : graphs) {
    std::vector<int> c(static_cast<std::size_t>(g->order()));
    for (Vertex v = 0; v < g->order(); ++v) c[static_cast<std::size_t>(v)] = g->degree(v);
    colors.push_back(std::move(c));
  }
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<std::vector<int>>> sigs(graphs.size());
    for (std::size_t k = 0; k < graphs.size(); ++k) {
      const Graph& g = *graphs[k];
      sigs[k].resize(static_cast<std::size_t>(g.order()));
      for (Vertex v = 0; v < g.order(); ++v) {
        auto& sig = sigs[k][static_cast<std::size_t>(v)];
        sig.push_back(colors[k][static_cast<std::size_t>(v)]);
        std::vector<int> around;
        for (Vertex w : g.neighbors(v)) around.push_back(colors[k][static_cast<std::size_t>(w)]);
        std::sort(around.begin(), around.end());
        sig.insert(sig.end(), around.begin(), around.end());
        ids.emplace(sig, 0);
      }
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t k = 0; k < graphs.size(); ++k)
      for (std::size_t v = 0; v < sigs[k].size(); ++v) colors[k][v] = ids[sigs[k][v]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return colors;
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b, std::vector<int> color_a, std::vector<int> color_b)
      : a_(a), b_(b), n_(a.order()), color_a_(std::move(color_a)), color_b_(std::move(color_b)),
        dist_a_(all_pairs_distances(a)), dist_b_(all_pairs_distances(b)) {
    build_order();
  }

  // Calls `visit` for every isomorphism; stops early when it returns false.
  void run(const std::function<bool(const std::vector<Vertex>&)>& visit) {
    image_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), 0);
    visit_ = &visit;
    stop_ = false;
    extend(0);
  }

  const std::vector<Vertex>& base() const { return order_; }

  // First isomorphism sending base()[i] to prefix[i] for every i, if any.
  std::optional<std::vector<Vertex>> first_with_prefix(const std::vector<Vertex>& prefix) {
    image_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), 0);
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (!compatible(i, order_[i], prefix[i])) return std::nullopt;
      image_[static_cast<std::size_t>(order_[i])] = prefix[i];
      used_[static_cast<std::size_t>(prefix[i])] = 1;
    }
    std::optional<std::vector<Vertex>> found;
    std::function<bool(const std::vector<Vertex>&)> take = [&](const std::vector<Vertex>& image) {
      found = image;
      return false;
    };
    visit_ = &take;
    stop_ = false;
    extend(prefix.size());
    return found;
  }

 private:
  int da(Vertex u, Vertex v) const { return dist_a_[static_cast<std::size_t>(u * n_ + v)]; }
  int db(Vertex u, Vertex v) const { return dist_b_[static_cast<std::size_t>(u * n_ + v)]; }

  void build_order() {
    std::map<int, int> class_size;
    for (int c : color_a_) ++class_size[c];
    std::vector<char> placed(static_cast<std::size_t>(n_), 0);
    std::vector<int> mapped_nbrs(static_cast<std::size_t>(n_), 0);
    for (int step = 0; step < n_; ++step) {
      Vertex best = -1;
      for (Vertex v = 0; v < n_; ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        if (best < 0) {
          best = v;
          continue;
        }
        auto key = [&](Vertex x) {
          return std::make_tuple(-mapped_nbrs[static_cast<std::size_t>(x)], class_size[color_a_[static_cast<std::size_t>(x)]], x);
        };
        if (key(v) < key(best)) best = v;
      }
      placed[static_cast<std::size_t>(best)] = 1;
      order_.push_back(best);
      for (Vertex w : a_.neighbors(best)) ++mapped_nbrs[static_cast<std::size_t>(w)];
    }
    anchor_.assign(static_cast<std::size_t>(n_), -1);
    std::vector<char> before(static_cast<std::size_t>(n_), 0);
    for (Vertex v : order_) {
      for (Vertex w : a_.neighbors(v))
        if (before[static_cast<std::size_t>(w)]) {
          anchor_[static_cast<std::size_t>(v)] = w;
          break;
        }
      before[static_cast<std::size_t>(v)] = 1;
    }
  }

  bool compatible(std::size_t depth, Vertex v, Vertex w) const {
    if (used_[static_cast<std::size_t>(w)] || color_a_[static_cast<std::size_t>(v)] != color_b_[static_cast<std::size_t>(w)])
      return false;
    for (std::size_t k = 0; k < depth; ++k) {
      Vertex u = order_[k];
      if (da(u, v) != db(image_[static_cast<std::size_t>(u)], w)) return false;
    }
    return true;
  }

  void extend(std::size_t depth) {
    if (stop_) return;
    if (depth == static_cast<std::size_t>(n_)) {
      if (!(*visit_)(image_)) stop_ = true;
      return;
    }
    Vertex v = order_[depth];
    auto try_candidate = [&](Vertex w) {
      if (!compatible(depth, v, w)) return;
      image_[static_cast<std::size_t>(v)] = w;
      used_[static_cast<std::size_t>(w)] = 1;
      extend(depth + 1);
      used_[static_cast<std::size_t>(w)] = 0;
      image_[static_cast<std::size_t>(v)] = -1;
    };
    Vertex anchor = anchor_[static_cast<std::size_t>(v)];
    if (anchor >= 0) {
      for (Vertex w : b_.neighbors(image_[static_cast<std::size_t>(anchor)])) {
        try_candidate(w);
        if (stop_) return;
      }
    } else {
      for (Vertex w = 0; w < n_; ++w) {
        try_candidate(w);
        if (stop_) return;
      }
    }
  }

  const Graph& a_;
  const Graph& b_;
  int n_;
  std::vector<int> color_a_, color_b_;
  std::vector<int> dist_a_, dist_b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> anchor_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
  const std::function<bool(const std::vector<Vertex>&)>* visit_ = nullptr;
  bool stop_ = false;
};

void check_size(const Graph& g, const SearchLimits& limits) {
  if (g.order() > limits.max_vertices)
    throw Error(Errc::Overflow, "graph has " + std::to_string(g.order()) + " vertices; automorphism search limit is " +
                                    std::to_string(limits.max_vertices));
}

}  // namespace

std::vector<int> refine_colors(const Graph& g) { return joint_refinement({&g}).front(); }

AutomorphismSummary automorphism_generators(const Graph& g, const SearchLimits& limits) {
  check_size(g, limits);
  const auto colors = refine_colors(g);
  Matcher matcher(g, g, colors, colors);
  const auto base = matcher.base();
  const int n = g.order();
  AutomorphismSummary out;
  out.order = 1;
  for (int k = n - 1; k >= 0; --k) {
    const Vertex b = base[static_cast<std::size_t>(k)];
    // Every generator found so far fixes base[0..k-1].
    auto orbit_of = [&](Vertex start) {
      std::vector<char> in(static_cast<std::size_t>(n), 0);
      std::vector<Vertex> queue{start};
      in[static_cast<std::size_t>(start)] = 1;
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (const auto& p : out.generators) {
          Vertex w = p(queue[i]);
          if (!in[static_cast<std::size_t>(w)]) {
            in[static_cast<std::size_t>(w)] = 1;
            queue.push_back(w);
          }
        }
      return in;
    };
    auto orbit = orbit_of(b);
    std::vector<Vertex> prefix(base.begin(), base.begin() + k);
    prefix.push_back(b);
    for (Vertex w = 0; w < n; ++w) {
      if (orbit[static_cast<std::size_t>(w)] || colors[static_cast<std::size_t>(w)] != colors[static_cast<std::size_t>(b)])
        continue;
      prefix.back() = w;
      if (auto image = matcher.first_with_prefix(prefix)) {
        out.generators.emplace_back(std::move(*image));
        orbit = orbit_of(b);
      }
    }
    const auto size = static_cast<std::uint64_t>(std::count(orbit.begin(), orbit.end(), 1));
    if (__builtin_mul_overflow(out.order, size, &out.order))
      throw Error(Errc::Overflow, "automorphism group order exceeds 64 bits");
  }
  return out;
}

PermGroup automorphisms(const Graph& g, const SearchLimits& limits) {
  check_size(g, limits);
  auto colors = refine_colors(g);
  Matcher matcher(g, g, colors, colors);
  std::vector<Permutation> found;
  matcher.run([&](const std::vector<Vertex>& image) {
    if (found.size() >= limits.max_group_order)
      throw Error(Errc::Overflow, "automorphism group exceeds " + std::to_string(limits.max_group_order) + " elements");
    found.emplace_back(image);
    return true;
  });
  return PermGroup::from_elements(g.order(), std::move(found));
}

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b, const SearchLimits& limits) {
  check_size(a, limits);
  check_size(b, limits);
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  auto colors = joint_refinement({&a, &b});
  auto ha = colors[0];
  auto hb = colors[1];
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return std::nullopt;
  Matcher matcher(a, b, colors[0], colors[1]);
  std::optional<std::vector<Vertex>> witness;
  matcher.run([&](const std::vector<Vertex>& image) {
    witness = image;
    return false;
  });
  return witness;
}

bool is_isomorphic(const Graph& a, const Graph& b, const SearchLimits& limits) {
  return find_isomorphism(a, b, limits).has_value();
}

std::vector<std::pair<std::string, std::string>> label_bijection(const Graph& a, const Graph& b,
                                                                 const std::vector<Vertex>& iso) {
  std::vector<std::pair<std::string, std::string>> out;
  for (Vertex v = 0; v < a.order(); ++v) out.emplace_back(a.label(v), b.label(iso[static_cast<std::size_t>(v)]));
  return out;
}

}  // namespace sierp
