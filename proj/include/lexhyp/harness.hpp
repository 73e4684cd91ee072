#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lexhyp/delta.hpp"
#include "lexhyp/error.hpp"
#include "lexhyp/family.hpp"
#include "lexhyp/geodesics.hpp"
#include "lexhyp/graph.hpp"
#include "lexhyp/isomorphism.hpp"
#include "lexhyp/json_io.hpp"
#include "lexhyp/product.hpp"
#include "lexhyp/subdivision.hpp"
#include "lexhyp/tree_lex.hpp"

namespace lexhyp {

// --- corpus ---------------------------------------------------------------

enum class CorpusFamily { paths, cycles, stars, random_trees, random_connected, complete, catalog_members };

inline const std::vector<std::pair<CorpusFamily, std::string>>& corpus_family_names() {
  static const std::vector<std::pair<CorpusFamily, std::string>> names{
      {CorpusFamily::paths, "paths"},
      {CorpusFamily::cycles, "cycles"},
      {CorpusFamily::stars, "stars"},
      {CorpusFamily::random_trees, "random_trees"},
      {CorpusFamily::random_connected, "random_connected"},
      {CorpusFamily::complete, "complete"},
      {CorpusFamily::catalog_members, "catalog_members"},
  };
  return names;
}

inline CorpusFamily parse_corpus_family(const std::string& name) {
  for (const auto& [f, n] : corpus_family_names())
    if (n == name) return f;
  throw ValidationError("unknown corpus family '" + name + "'");
}

struct CorpusSpec {
  std::uint64_t seed = 1;
  std::vector<CorpusFamily> families{CorpusFamily::paths,        CorpusFamily::cycles,
                                     CorpusFamily::stars,        CorpusFamily::random_trees,
                                     CorpusFamily::random_connected, CorpusFamily::complete,
                                     CorpusFamily::catalog_members};
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 6;
  std::size_t random_per_size = 2;
  /// Largest product (in vertices) on which delta-engine checks run.
  std::size_t product_cap = 24;
  /// Largest product a drawn pair may have.
  std::size_t pair_vertex_cap = 24;
  std::size_t pair_count = 100;
};

struct CorpusGraph {
  std::string name;
  Graph graph;
};

struct Corpus {
  CorpusSpec spec;
  std::vector<CorpusGraph> graphs;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // indices into graphs
};

/// Deterministic generator on top of mt19937_64 (bounded draws by rejection, so
/// the stream does not depend on the standard library's distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do x = eng_();
    while (x >= limit);
    return x % n;
  }
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 eng_;
};

/// Tree by uniform attachment: vertex i joins a uniformly chosen earlier vertex.
inline Graph random_tree(std::size_t n, Rng& rng) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(static_cast<Vertex>(rng.below(i)), static_cast<Vertex>(i));
  return Graph::make(n, std::move(edges));
}

/// Random spanning tree plus `extra` distinct random non-tree edges.
inline Graph random_connected(std::size_t n, std::size_t extra, Rng& rng) {
  std::vector<Edge> edges = random_tree(n, rng).edges();
  std::vector<Edge> missing;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (!std::binary_search(edges.begin(), edges.end(), Edge{a, b})) missing.emplace_back(a, b);
  rng.shuffle(missing);
  extra = std::min(extra, missing.size());
  edges.insert(edges.end(), missing.begin(), missing.begin() + static_cast<std::ptrdiff_t>(extra));
  return Graph::make(n, std::move(edges));
}

/// Expands a spec. Isomorphic duplicates keep the first name. Pairs are drawn
/// without replacement among all ordered pairs within pair_vertex_cap.
inline Corpus generate_corpus(const CorpusSpec& spec) {
  if (spec.min_vertices < 1 || spec.min_vertices > spec.max_vertices) {
    throw ValidationError("infeasible corpus bounds: need 1 <= min_vertices <= max_vertices");
  }
  Corpus c;
  c.spec = spec;
  Rng rng(spec.seed);
  std::set<std::string> seen;
  auto add = [&](std::string name, Graph g) {
    if (seen.insert(canonical_form(g)).second) c.graphs.push_back({std::move(name), std::move(g)});
  };
  auto has = [&](CorpusFamily f) { return std::find(spec.families.begin(), spec.families.end(), f) != spec.families.end(); };
  const std::size_t lo = spec.min_vertices, hi = spec.max_vertices;
  if (has(CorpusFamily::paths))
    for (std::size_t n = lo; n <= hi; ++n) add("path:" + std::to_string(n), gen::path(n));
  if (has(CorpusFamily::cycles))
    for (std::size_t n = std::max<std::size_t>(lo, 3); n <= hi; ++n) add("cycle:" + std::to_string(n), gen::cycle(n));
  if (has(CorpusFamily::stars))
    for (std::size_t n = std::max<std::size_t>(lo, 1); n <= hi; ++n) add("star:" + std::to_string(n - 1), gen::star(n - 1));
  if (has(CorpusFamily::complete))
    for (std::size_t n = lo; n <= hi; ++n) add("complete:" + std::to_string(n), gen::complete(n));
  if (has(CorpusFamily::random_trees)) {
    for (std::size_t n = lo; n <= hi; ++n)
      for (std::size_t i = 0; i < spec.random_per_size; ++i)
        add("tree" + std::to_string(n) + "#" + std::to_string(i), random_tree(n, rng));
  }
  if (has(CorpusFamily::random_connected)) {
    for (std::size_t n = std::max<std::size_t>(lo, 3); n <= hi; ++n) {
      const std::size_t room = n * (n - 1) / 2 - (n - 1);
      for (std::size_t i = 0; i < spec.random_per_size; ++i) {
        const std::size_t extra = rng.between(1, std::min(room, n));
        add("conn" + std::to_string(n) + "#" + std::to_string(i), random_connected(n, extra, rng));
      }
    }
  }
  if (has(CorpusFamily::catalog_members)) {
    const auto& cat = default_catalog();
    for (std::size_t i = 0; i < cat.members.size(); ++i) add("F" + std::to_string(i), cat.members[i].graph);
  }
  if (c.graphs.empty()) throw ValidationError("corpus spec produces no graphs");

  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t i = 0; i < c.graphs.size(); ++i)
    for (std::size_t j = 0; j < c.graphs.size(); ++j)
      if (c.graphs[i].graph.vertex_count() * c.graphs[j].graph.vertex_count() <= spec.pair_vertex_cap)
        candidates.emplace_back(i, j);
  if (spec.pair_count > 0 && candidates.empty()) throw ValidationError("no pair fits within pair_vertex_cap");
  rng.shuffle(candidates);
  c.pairs.assign(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(std::min(spec.pair_count, candidates.size())));
  std::sort(c.pairs.begin(), c.pairs.end());
  return c;
}

// --- report ---------------------------------------------------------------

struct Failure {
  Json inputs;
  Json expected;
  Json actual;
};

struct CheckResult {
  std::size_t instances = 0;
  std::vector<Failure> failures;
  double millis = 0;

  bool passed() const { return failures.empty(); }
};

struct SuiteReport {
  std::map<std::string, CheckResult> results;  // sorted by id

  bool all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const auto& kv) { return kv.second.passed(); });
  }

  Json to_json(bool include_timing = true) const {
    Json j = Json::object();
    for (const auto& [id, r] : results) {
      Json failures = Json::array();
      for (const auto& f : r.failures)
        failures.push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}});
      Json entry{{"status", r.passed() ? "pass" : "fail"}, {"instances", r.instances}, {"failures", failures}};
      entry["millis"] = include_timing ? r.millis : 0.0;
      j[id] = entry;
    }
    return j;
  }
};

// --- checks ---------------------------------------------------------------

/// Shared state of one suite run: the corpus, memoised engine results, and
/// helpers to describe inputs.
class SuiteContext {
 public:
  enum class Mode { standard, grid8, unrestricted, side3 };

  explicit SuiteContext(const Corpus& c) : corpus_(c) {
    for (std::size_t i = 0; i < c.graphs.size(); ++i) items_.push_back({c.graphs[i].name, &c.graphs[i].graph, single_input(i)});
    for (std::size_t p = 0; p < c.pairs.size(); ++p) {
      const auto [a, b] = c.pairs[p];
      const std::size_t n = c.graphs[a].graph.vertex_count() * c.graphs[b].graph.vertex_count();
      if (n <= c.spec.product_cap) {
        products_.push_back(p);
      }
    }
    // Products are materialised once; items keep stable pointers into lex_.
    lex_.reserve(c.pairs.size());
    for (const auto& [a, b] : c.pairs) {
      lex_.push_back(product(c.graphs[a].graph, c.graphs[b].graph, ProductKind::lexicographic,
                             std::max(c.spec.pair_vertex_cap, c.spec.product_cap)));
    }
    for (std::size_t p : products_) {
      const auto [a, b] = c.pairs[p];
      items_.push_back({"lex(" + c.graphs[a].name + "," + c.graphs[b].name + ")", &lex_[p].graph(), pair_input(p)});
    }
  }

  struct Item {
    std::string name;
    const Graph* graph;
    Json inputs;
  };

  const Corpus& corpus() const { return corpus_; }
  const Graph& g(std::size_t i) const { return corpus_.graphs[i].graph; }
  /// Every corpus graph plus every lex product within product_cap.
  const std::vector<Item>& items() const { return items_; }
  /// Pair indices whose product is within product_cap.
  const std::vector<std::size_t>& capped_pairs() const { return products_; }
  const ProductGraph& lex(std::size_t pair) const { return lex_[pair]; }

  Json single_input(std::size_t i) const {
    return Json{{"graph", {{"name", corpus_.graphs[i].name}, {"edges", edges_json(g(i))},
                           {"vertices", g(i).vertex_count()}}},
                {"seed", corpus_.spec.seed}};
  }
  Json pair_input(std::size_t p) const {
    const auto [a, b] = corpus_.pairs[p];
    return Json{{"g1", {{"name", corpus_.graphs[a].name}, {"vertices", g(a).vertex_count()}, {"edges", edges_json(g(a))}}},
                {"g2", {{"name", corpus_.graphs[b].name}, {"vertices", g(b).vertex_count()}, {"edges", edges_json(g(b))}}},
                {"seed", corpus_.spec.seed}};
  }

  const DeltaResult& delta(const Graph& graph, Mode mode = Mode::standard) {
    const std::string key = std::to_string(static_cast<int>(mode)) + "|" + key_of(graph);
    auto it = delta_.find(key);
    if (it != delta_.end()) return it->second;
    DeltaConfig cfg;
    cfg.grid_factor = mode == Mode::grid8 ? 8 : 4;
    cfg.cycle_only = mode != Mode::unrestricted;
    if (mode == Mode::side3) {
      cfg.max_side_length = QDist::from_units(3);
      cfg.thin_points_at_vertices = true;
    }
    return delta_.emplace(key, delta_exact(graph, cfg)).first->second;
  }

  QDist bigon(const Graph& graph) {
    const std::string key = key_of(graph);
    auto it = bigon_.find(key);
    if (it != bigon_.end()) return it->second;
    return bigon_.emplace(key, delta_bigon_lower_bound(graph)).first->second;
  }

  bool in_F(const Graph& graph) {
    const std::string key = key_of(graph);
    auto it = in_f_.find(key);
    if (it != in_f_.end()) return it->second;
    return in_f_.emplace(key, in_family_F(graph).member).first->second;
  }

  static std::string key_of(const Graph& graph) {
    std::string k = std::to_string(graph.vertex_count()) + ":";
    for (auto [a, b] : graph.edges()) k += std::to_string(a) + "-" + std::to_string(b) + ",";
    return k;
  }

 private:
  const Corpus& corpus_;
  std::vector<Item> items_;
  std::vector<std::size_t> products_;
  std::vector<ProductGraph> lex_;
  std::map<std::string, DeltaResult> delta_;
  std::map<std::string, QDist> bigon_;
  std::map<std::string, bool> in_f_;
};

namespace checks {

using Mode = SuiteContext::Mode;

inline std::string qs(QDist d) { return d.to_string(); }

/// Records one instance; a false `ok` adds a failure.
inline void expect(CheckResult& r, bool ok, const Json& inputs, Json expected, Json actual) {
  ++r.instances;
  if (!ok) r.failures.push_back({inputs, std::move(expected), std::move(actual)});
}

inline bool is_cycle_graph(const Graph& g) {
  if (g.vertex_count() < 3 || g.edge_count() != g.vertex_count()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

// graph-core

inline CheckResult metric_axioms(SuiteContext& ctx) {
  CheckResult r;
  for (std::size_t i = 0; i < ctx.corpus().graphs.size(); ++i) {
    const auto s = subdivide(ctx.g(i), 4);
    if (s.size() > 160) continue;
    const auto m = all_pairs_distances(s);
    bool ok = true;
    std::string why;
    const auto n = static_cast<Vertex>(s.size());
    for (Vertex a = 0; a < n && ok; ++a) {
      if (m.hops(a, a) != 0) ok = false, why = "non-zero diagonal";
      for (Vertex b = 0; b < n && ok; ++b) {
        if (m.hops(a, b) != m.hops(b, a)) ok = false, why = "asymmetric";
        if (a != b && m.hops(a, b) == 0) ok = false, why = "distinct points at distance 0";
        for (Vertex c = 0; c < n && ok; ++c)
          if (m.hops(a, c) > m.hops(a, b) + m.hops(b, c)) ok = false, why = "triangle inequality";
      }
    }
    for (Vertex a = 0; a < n && ok; ++a)
      for (Vertex b = 0; b < n && ok; ++b) {
        const auto q = m.hops(a, b);  // k = 4: hops are quarters
        if (s.is_base_vertex(a) && s.is_base_vertex(b) && q % 4 != 0) ok = false, why = "vertex distance not integral";
        if (s.in_j(a) && s.in_j(b) && q % 2 != 0) ok = false, why = "J distance not a half-integer";
      }
    expect(r, ok, ctx.single_input(i), "metric", why);
  }
  return r;
}

inline CheckResult subdivision_scaling(SuiteContext& ctx) {
  CheckResult r;
  for (std::size_t i = 0; i < ctx.corpus().graphs.size(); ++i) {
    const Graph& g = ctx.g(i);
    const auto base = g.distance_matrix();
    const std::size_t n = g.vertex_count();
    for (int k : {2, 4, 8}) {
      const auto s = subdivide(g, k);
      bool ok = s.size() == n + static_cast<std::size_t>(k - 1) * g.edge_count();
      for (Vertex v = 0; v < s.size() && ok; ++v) {
        const auto& o = s.origin(v);
        const bool expect_j = o.is_base_vertex || 2 * o.offset == static_cast<std::uint32_t>(k);
        if (s.in_j(v) != expect_j) ok = false;
      }
      for (Vertex a = 0; a < n && ok; ++a) {
        const auto d = s.bfs(a);
        for (Vertex b = 0; b < n && ok; ++b)
          if (d[b] != static_cast<std::uint32_t>(k) * base[a * n + b]) ok = false;
      }
      expect(r, ok, ctx.single_input(i), "hop distances scale by " + std::to_string(k), ok ? "scaled" : "mismatch");
    }
  }
  return r;
}

inline CheckResult diam_bounds(SuiteContext& ctx) {
  CheckResult r;
  for (std::size_t i = 0; i < ctx.corpus().graphs.size(); ++i) {
    const auto d = diameters(ctx.g(i));
    const bool ok = d.vertex <= d.graph && d.graph <= d.vertex + qd::one && d.graph.quarters() % 2 == 0;
    expect(r, ok, ctx.single_input(i), "diam V <= diam G <= diam V + 1, diam G half-integral",
           Json{{"diam_v", qs(d.vertex)}, {"diam_g", qs(d.graph)}});
  }
  return r;
}

/// diam G from J-points of S2 against the maximum over every point of S8.
inline CheckResult diam_S8_crosscheck(SuiteContext& ctx) {
  CheckResult r;
  for (std::size_t i = 0; i < ctx.corpus().graphs.size(); ++i) {
    const Graph& g = ctx.g(i);
    if (g.is_trivial()) continue;
    const auto s8 = subdivide(g, 8);
    std::uint32_t best = 0;
    for (Vertex a = 0; a < s8.size(); ++a) {
      const auto d = s8.bfs(a);
      best = std::max(best, *std::max_element(d.begin(), d.end()));
    }
    const auto fine = QDist::from_quarters(best / 2);  // 8 hops per edge; best is even at maxima
    const auto coarse = diameters(g).graph;
    expect(r, best % 2 == 0 && fine == coarse, ctx.single_input(i), qs(coarse),
           best % 2 == 0 ? qs(fine) : std::to_string(best) + "/8");
  }
  return r;
}

// products

inline CheckResult dist_formula(SuiteContext& ctx) {
  CheckResult r;
  const auto& c = ctx.corpus();
  for (std::size_t p = 0; p < c.pairs.size(); ++p) {
    const auto [a, b] = c.pairs[p];
    const Graph &g1 = ctx.g(a), &g2 = ctx.g(b);
    if (g1.is_trivial()) continue;
    const auto d1 = g1.distance_matrix();
    const auto d2 = g2.distance_matrix();
    const auto& prod = ctx.lex(p);
    const std::size_t n = prod.graph().vertex_count();
    for (Vertex x = 0; x < n; ++x) {
      const auto bfs = prod.graph().bfs(x);
      for (Vertex y = 0; y < n; ++y) {
        const auto closed = lex_distance(d1, g1.vertex_count(), d2, g2.vertex_count(), prod.coords(x), prod.coords(y));
        const auto actual = QDist::from_units(bfs[y]);
        ++r.instances;
        if (closed != actual) {
          Json in = ctx.pair_input(p);
          in["a"] = {prod.coords(x).first, prod.coords(x).second};
          in["b"] = {prod.coords(y).first, prod.coords(y).second};
          r.failures.push_back({in, qs(closed), qs(actual)});
        }
      }
    }
  }
  return r;
}

inline CheckResult lex_adjacency(SuiteContext& ctx) {
  CheckResult r;
  const auto& c = ctx.corpus();
  for (std::size_t p = 0; p < c.pairs.size(); ++p) {
    const auto [a, b] = c.pairs[p];
    const Graph &g1 = ctx.g(a), &g2 = ctx.g(b);
    const auto& prod = ctx.lex(p);
    bool ok = prod.graph().vertex_count() == g1.vertex_count() * g2.vertex_count();
    for (Vertex x = 0; x < prod.graph().vertex_count() && ok; ++x)
      for (Vertex y = 0; y < prod.graph().vertex_count() && ok; ++y) {
        const auto [u1, v1] = prod.coords(x);
        const auto [u2, v2] = prod.coords(y);
        const bool want = g1.has_edge(u1, u2) || (u1 == u2 && g2.has_edge(v1, v2));
        if (want != prod.graph().has_edge(x, y)) ok = false;
      }
    expect(r, ok, ctx.pair_input(p), "lexicographic adjacency rule", ok ? "holds" : "violated");
  }
  return r;
}

inline CheckResult edge_containment(SuiteContext& ctx) {
  CheckResult r;
  const auto& c = ctx.corpus();
  for (std::size_t p = 0; p < c.pairs.size(); ++p) {
    const auto [a, b] = c.pairs[p];
    const auto cap = c.spec.pair_vertex_cap;
    const auto cart = product(ctx.g(a), ctx.g(b), ProductKind::cartesian, cap);
    const auto strong = product(ctx.g(a), ctx.g(b), ProductKind::strong, cap);
    const auto& lex = ctx.lex(p);
    bool ok = true;
    for (auto [x, y] : cart.graph().edges()) ok = ok && strong.graph().has_edge(x, y);
    for (auto [x, y] : strong.graph().edges()) ok = ok && lex.graph().has_edge(x, y);
    expect(r, ok, ctx.pair_input(p), "E(cart) <= E(strong) <= E(lex)",
           Json{{"cart", cart.graph().edge_count()}, {"strong", strong.graph().edge_count()},
                {"lex", lex.graph().edge_count()}});
  }
  return r;
}

inline CheckResult copy_isometry(SuiteContext& ctx) {
  CheckResult r;
  const auto& c = ctx.corpus();
  for (std::size_t p = 0; p < c.pairs.size(); ++p) {
    const auto [a, b] = c.pairs[p];
    const auto& prod = ctx.lex(p);
    for (Vertex w = 0; w < ctx.g(b).vertex_count(); ++w) {
      std::vector<Vertex> map;
      for (Vertex u = 0; u < ctx.g(a).vertex_count(); ++u) map.push_back(prod.index(u, w));
      const bool ok = is_isometric_embedding(ctx.g(a), prod.graph(), map);
      Json in = ctx.pair_input(p);
      in["w"] = w;
      expect(r, ok, in, true, ok);
    }
  }
  return r;
}

/// Grid vertices of S4(G1 o G2) lying on the copy G1 o {w}.
inline std::vector<Vertex> copy_points(const SubdividedGraph& s, const ProductGraph& prod, Vertex w) {
  std::vector<Vertex> pts;
  for (Vertex u = 0; u < prod.factor1().vertex_count(); ++u) pts.push_back(prod.index(u, w));
  const auto& edges = prod.graph().edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (prod.coords(edges[e].first).second != w || prod.coords(edges[e].second).second != w) continue;
    for (std::uint32_t j = 1; j < static_cast<std::uint32_t>(s.k()); ++j) pts.push_back(s.point_on_edge(e, j));
  }
  return pts;
}

inline CheckResult neighborhood_3_2(SuiteContext& ctx) {
  CheckResult r;
  const auto& c = ctx.corpus();
  for (std::size_t p = 0; p < c.pairs.size(); ++p) {
    const auto [a, b] = c.pairs[p];
    if (ctx.g(a).is_trivial()) continue;
    const auto& prod = ctx.lex(p);
    const auto s = subdivide(prod.graph(), 4, std::numeric_limits<std::size_t>::max());
    for (Vertex w = 0; w < ctx.g(b).vertex_count(); ++w) {
      const auto d = s.bfs_from_set(copy_points(s, prod, w));
      const auto far = *std::max_element(d.begin(), d.end());
      Json in = ctx.pair_input(p);
      in["w"] = w;
      expect(r, far <= 6, in, "<= 3/2", qs(QDist::from_hops(far, 4)));
    }
  }
  return r;
}

/// For each pair, each x0 and each pair of J-points y1, y2 of G2: the distance
/// in G2 and between (x0,y1), (x0,y2) in G1 o G2, both on S4 grids.
template <typename Visit>
void for_copy_distances(SuiteContext& ctx, std::size_t p, Visit&& visit) {
  const auto [a, b] = ctx.corpus().pairs[p];
  const Graph &g1 = ctx.g(a), &g2 = ctx.g(b);
  const auto& prod = ctx.lex(p);
  const auto s2 = subdivide(g2, 4);
  const auto m2 = all_pairs_distances(s2);
  const auto sp = subdivide(prod.graph(), 4, std::numeric_limits<std::size_t>::max());
  // J-point of G2 (grid id in s2) -> grid id in sp for a fixed x0.
  auto lift = [&](Vertex y, Vertex x0) -> Vertex {
    const auto& o = s2.origin(y);
    if (o.is_base_vertex) return prod.index(x0, o.index);
    const auto [u, v] = g2.edges()[o.index];
    return sp.midpoint(*prod.graph().edge_index(prod.index(x0, u), prod.index(x0, v)));
  };
  const auto& js = s2.j_set();
  for (Vertex x0 = 0; x0 < g1.vertex_count(); ++x0) {
    for (std::size_t i = 0; i < js.size(); ++i) {
      const auto dp = sp.bfs(lift(js[i], x0));
      for (std::size_t j = i + 1; j < js.size(); ++j) {
        const QDist in_g2 = m2.distance(js[i], js[j]);
        const QDist in_prod = QDist::from_hops(dp[lift(js[j], x0)], 4);
        const bool both_mid = !s2.is_base_vertex(js[i]) && !s2.is_base_vertex(js[j]);
        Json where{{"x0", x0}, {"y1", point_label(s2, js[i])}, {"y2", point_label(s2, js[j])}};
        visit(in_g2, in_prod, both_mid, where);
      }
    }
  }
}

enum class CopyCase { up_to_5_2, beyond_3, midpoints_at_3 };

inline CheckResult geodesic_copy(SuiteContext& ctx, CopyCase which) {
  CheckResult r;
  for (std::size_t p : ctx.capped_pairs()) {
    if (ctx.g(ctx.corpus().pairs[p].first).is_trivial()) continue;
    for_copy_distances(ctx, p, [&](QDist d2, QDist dp, bool both_mid, const Json& where) {
      Json in = ctx.pair_input(p);
      in["points"] = where;
      switch (which) {
        case CopyCase::up_to_5_2:
          if (d2 <= QDist::from_halves(5)) expect(r, dp == d2, in, qs(d2), qs(dp));
          break;
        case CopyCase::beyond_3:
          if (d2 > QDist::from_units(3)) expect(r, dp < d2, in, "< " + qs(d2), qs(dp));
          break;
        case CopyCase::midpoints_at_3:
          if (both_mid && d2 == QDist::from_units(3)) expect(r, dp == d2, in, qs(d2), qs(dp));
          break;
      }
    });
  }
  return r;
}

/// Vertex-level geodesics of G1 o G2 of length >= 3 project to geodesics of G1
/// without intra-copy steps; beyond length 3 the projection has >= 3 vertices.
inline CheckResult projection_geodesic(SuiteContext& ctx) {
  CheckResult r;
  const auto& c = ctx.corpus();
  for (std::size_t p = 0; p < c.pairs.size(); ++p) {
    const auto [a, b] = c.pairs[p];
    const Graph& g1 = ctx.g(a);
    if (g1.is_trivial()) continue;
    const auto d1 = g1.distance_matrix();
    const std::size_t n1 = g1.vertex_count();
    const auto& prod = ctx.lex(p);
    const auto& pg = prod.graph();
    for (Vertex x = 0; x < pg.vertex_count(); ++x) {
      const auto dx = pg.bfs(x);
      for (Vertex y = x + 1; y < pg.vertex_count(); ++y) {
        if (dx[y] < 3) continue;
        for (const auto& path : enumerate_geodesics(pg, x, y, 100000)) {
          std::vector<Vertex> proj;
          bool intra = false;
          for (Vertex v : path) {
            const Vertex u = prod.coords(v).first;
            if (!proj.empty() && proj.back() == u) intra = true;
            else proj.push_back(u);
          }
          bool geo = proj.size() == d1[proj.front() * n1 + proj.back()] + 1;
          for (std::size_t i = 0; i + 1 < proj.size(); ++i) geo = geo && g1.has_edge(proj[i], proj[i + 1]);
          std::set<Vertex> distinct(proj.begin(), proj.end());
          const bool three = dx[y] <= 3 || distinct.size() >= 3;
          const bool ok = geo && !intra && three;
          ++r.instances;
          if (!ok) {
            Json in = ctx.pair_input(p);
            in["geodesic"] = path;
            r.failures.push_back({in, "projection is a geodesic of G1 with no intra-copy edge",
                                  Json{{"projection", proj}, {"intra_copy_edge", intra}}});
          }
        }
      }
    }
  }
  return r;
}

/// Isometric subgraphs of g used as sub-factors: g itself, its edges, and a
/// geodesic between a farthest pair. Each is returned as a sorted vertex set.
inline std::vector<std::vector<Vertex>> isometric_pieces(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> all(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
  out.push_back(all);
  for (std::size_t e = 0; e < std::min<std::size_t>(g.edge_count(), 3); ++e)
    out.push_back({g.edges()[e].first, g.edges()[e].second});
  const auto d = g.distance_matrix();
  const std::size_t n = g.vertex_count();
  std::size_t best = 0;
  for (std::size_t i = 0; i < n * n; ++i)
    if (d[i] > d[best]) best = i;
  if (d[best] >= 2) {
    const auto from = static_cast<Vertex>(best / n), to = static_cast<Vertex>(best % n);
    std::vector<Vertex> path{from};
    while (path.back() != to) {
      for (Vertex w : g.neighbors(path.back())) {
        if (d[w * n + to] + 1 == d[path.back() * n + to]) {
          path.push_back(w);
          break;
        }
      }
    }
    std::sort(path.begin(), path.end());
    out.push_back(path);
  }
  return out;
}

inline CheckResult isometric_subproduct(SuiteContext& ctx) {
  CheckResult r;
  const auto& c = ctx.corpus();
  for (std::size_t p = 0; p < c.pairs.size(); ++p) {
    const auto [a, b] = c.pairs[p];
    const Graph &g1 = ctx.g(a), &g2 = ctx.g(b);
    if (g1.is_trivial()) continue;
    const auto& prod = ctx.lex(p);
    auto pieces2 = isometric_pieces(g2);
    pieces2.push_back({0});
    for (const auto& s1 : isometric_pieces(g1)) {
      const Graph h1 = induced_subgraph(g1, s1);
      if (!is_isometric_embedding(h1, g1, s1)) continue;
      for (const auto& s2 : pieces2) {
        const Graph h2 = induced_subgraph(g2, s2);
        if (!is_isometric_embedding(h2, g2, s2)) continue;
        const auto sub = product(h1, h2, ProductKind::lexicographic, c.spec.pair_vertex_cap);
        std::vector<Vertex> map(sub.graph().vertex_count());
        for (Vertex v = 0; v < map.size(); ++v) {
          const auto [u, w] = sub.coords(v);
          map[v] = prod.index(s1[u], s2[w]);
        }
        const bool ok = is_isometric_embedding(sub.graph(), prod.graph(), map);
        Json in = ctx.pair_input(p);
        in["gamma1"] = s1;
        in["gamma2"] = s2;
        expect(r, ok, in, true, ok);
      }
    }
    // With a trivial first sub-factor the copy of a G2 of vertex diameter >= 3 is not isometric.
    if (diameters(g2).vertex >= QDist::from_units(3)) {
      std::vector<Vertex> map;
      for (Vertex w = 0; w < g2.vertex_count(); ++w) map.push_back(prod.index(0, w));
      const bool iso = is_isometric_embedding(g2, prod.graph(), map);
      Json in = ctx.pair_input(p);
      in["gamma1"] = Json::array({0});
      expect(r, !iso, in, false, iso);
    }
  }
  return r;
}

// hyperbolicity

inline CheckResult quarter_multiple(SuiteContext& ctx) {
  CheckResult r;
  for (const auto& it : ctx.items()) {
    const auto& fine = ctx.delta(*it.graph, Mode::grid8);
    expect(r, fine.hops % 2 == 0, it.inputs, "even number of eighths", std::to_string(fine.hops) + "/8");
  }
  return r;
}

inline CheckResult delta_diam_half(SuiteContext& ctx) {
  CheckResult r;
  for (const auto& it : ctx.items()) {
    const auto d = ctx.delta(*it.graph).value;
    const auto diam = diameters(*it.graph).graph;
    expect(r, 2 * d.quarters() <= diam.quarters(), it.inputs, "<= " + qs(diam) + " / 2", qs(d));
  }
  return r;
}

inline CheckResult tree_delta_zero(SuiteContext& ctx) {
  CheckResult r;
  for (const auto& it : ctx.items()) {
    const auto d = ctx.delta(*it.graph).value;
    const bool tree = it.graph->is_tree();
    expect(r, (d == qd::zero) == tree, it.inputs, tree ? "0" : "> 0", qs(d));
  }
  return r;
}

inline CheckResult cycle_delta_n_4(SuiteContext& ctx) {
  CheckResult r;
  for (const auto& it : ctx.items()) {
    if (!is_cycle_graph(*it.graph)) continue;
    const auto want = QDist::from_quarters(static_cast<std::int64_t>(it.graph->vertex_count()));
    const auto d = ctx.delta(*it.graph).value;
    expect(r, d == want, it.inputs, qs(want), qs(d));
  }
  return r;
}

inline Json named_pair(const std::string& a, const std::string& b) { return Json{{"g1", a}, {"g2", b}}; }

inline CheckResult examples_Pn_P2(SuiteContext& ctx) {
  CheckResult r;
  for (std::size_t n = 2; 2 * n <= ctx.corpus().spec.product_cap; ++n) {
    const auto g = product(gen::path(n), gen::path(2), ProductKind::lexicographic).graph();
    const QDist want = n == 2 ? qd::one : n == 3 ? qd::five_quarters : qd::three_halves;
    const auto d = ctx.delta(g).value;
    expect(r, d == want, named_pair("path:" + std::to_string(n), "path:2"), qs(want), qs(d));
  }
  return r;
}

inline CheckResult examples_Cn_P2(SuiteContext& ctx) {
  CheckResult r;
  for (std::size_t n = 3; 2 * n <= ctx.corpus().spec.product_cap; ++n) {
    const auto g = product(gen::cycle(n), gen::path(2), ProductKind::lexicographic).graph();
    const QDist want = n == 3 ? qd::one : n == 4 ? qd::five_quarters : QDist::from_quarters(static_cast<std::int64_t>(n));
    const auto d = ctx.delta(g).value;
    expect(r, d == want, named_pair("cycle:" + std::to_string(n), "path:2"), qs(want), qs(d));
  }
  return r;
}

inline CheckResult example_complete(SuiteContext& ctx) {
  CheckResult r;
  for (std::size_t m = 2; 2 * m <= ctx.corpus().spec.product_cap; ++m) {
    for (std::size_t n = 2; m * n <= ctx.corpus().spec.product_cap; ++n) {
      const auto g = product(gen::complete(m), gen::complete(n), ProductKind::lexicographic).graph();
      const std::size_t mn = m * n;
      const bool complete = g.edge_count() == mn * (mn - 1) / 2;
      const auto d = ctx.delta(g).value;
      expect(r, complete && d == qd::one, named_pair("complete:" + std::to_string(m), "complete:" + std::to_string(n)),
             Json{{"edges", mn * (mn - 1) / 2}, {"delta", "1"}}, Json{{"edges", g.edge_count()}, {"delta", qs(d)}});
    }
  }
  return r;
}

inline CheckResult grid_stability_S8(SuiteContext& ctx) {
  CheckResult r;
  for (const auto& it : ctx.items()) {
    const auto coarse = ctx.delta(*it.graph).value;
    const auto& fine = ctx.delta(*it.graph, Mode::grid8);
    const bool ok = fine.hops % 2 == 0 && QDist::from_hops(fine.hops, 8) == coarse;
    expect(r, ok, it.inputs, qs(coarse), fine.hops % 2 == 0 ? qs(fine.value) : std::to_string(fine.hops) + "/8");
  }
  return r;
}

inline CheckResult cycle_only_equivalence(SuiteContext& ctx) {
  CheckResult r;
  for (const auto& it : ctx.items()) {
    const auto a = ctx.delta(*it.graph).value;
    const auto b = ctx.delta(*it.graph, Mode::unrestricted).value;
    expect(r, a == b, it.inputs, qs(b), qs(a));
  }
  return r;
}

inline CheckResult bigon_lower_bound(SuiteContext& ctx) {
  CheckResult r;
  for (const auto& it : ctx.items()) {
    const auto d = ctx.delta(*it.graph).value;
    const auto bg = ctx.bigon(*it.graph);
    expect(r, bg <= d, it.inputs, "<= " + qs(d), qs(bg));
  }
  return r;
}

/// delta(h) <= delta(g) for every isometric subgraph h = g - v.
inline CheckResult isometric_monotonicity(SuiteContext& ctx) {
  CheckResult r;
  for (std::size_t i = 0; i < ctx.corpus().graphs.size(); ++i) {
    const Graph& g = ctx.g(i);
    if (g.vertex_count() < 2) continue;
    const auto dg = ctx.delta(g).value;
    for (Vertex drop = 0; drop < g.vertex_count(); ++drop) {
      std::vector<Vertex> keep;
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (v != drop) keep.push_back(v);
      const Graph h0 = induced_subgraph(g, keep);
      if (!h0.is_connected() || !is_isometric_embedding(h0, g, keep)) continue;
      const Graph h = Graph::make(h0.vertex_count(), h0.edges());
      const auto dh = ctx.delta(h).value;
      Json in = ctx.single_input(i);
      in["removed_vertex"] = drop;
      expect(r, dh <= dg, in, "<= " + qs(dg), qs(dh));
    }
  }
  return r;
}

inline CheckResult witness_validity(SuiteContext& ctx) {
  CheckResult r;
  for (const auto& it : ctx.items()) {
    const auto& res = ctx.delta(*it.graph);
    if (!res.witness) {
      expect(r, res.value == qd::zero, it.inputs, "witness for a positive constant", "none");
      continue;
    }
    const auto s = subdivide(*it.graph, res.grid_factor, std::numeric_limits<std::size_t>::max());
    std::string problem;
    try {
      validate_triangle(s, *res.witness);
    } catch (const ValidationError& e) {
      problem = e.what();
    }
    const auto th = thinness(s, *res.witness);
    if (problem.empty() && th.hops != res.hops) problem = "thinness " + qs(th.value()) + " differs from value";
    if (problem.empty() && res.value > qd::zero && !is_cycle_triangle(*res.witness, s.size()))
      problem = "witness is not a cycle";
    if (problem.empty()) {
      const auto& side = res.witness->sides[static_cast<std::size_t>(res.witness_side)];
      if (std::find(side.begin(), side.end(), *res.witness_point) == side.end()) problem = "witness point off its side";
    }
    expect(r, problem.empty(), it.inputs, qs(res.value), problem.empty() ? Json(qs(res.value)) : Json(problem));
  }
  return r;
}

// lex-classifier

enum class BoundId { sandwich, lb1, lb54_v2, lb54_g2, lb32_v3, strict_upper, equality };

inline CheckResult bounds(SuiteContext& ctx, BoundId which) {
  CheckResult r;
  const auto& c = ctx.corpus();
  for (std::size_t p : ctx.capped_pairs()) {
    const auto [a, b] = c.pairs[p];
    const Graph &g1 = ctx.g(a), &g2 = ctx.g(b);
    if (g1.is_trivial()) continue;
    const auto dp = ctx.delta(ctx.lex(p).graph()).value;
    const auto d1 = ctx.delta(g1).value;
    if (which == BoundId::strict_upper) {
      if (g1.is_tree()) continue;
      expect(r, dp < d1 + qd::three_halves, ctx.pair_input(p), "< " + qs(d1 + qd::three_halves), qs(dp));
      continue;
    }
    const auto rep = bound_check(g1, g2, dp, d1);
    auto find = [&](const std::string& id) -> const BoundResult& {
      for (const auto& br : rep.results)
        if (br.id == id) return br;
      throw std::logic_error("missing bound " + id);
    };
    std::vector<const BoundResult*> sel;
    switch (which) {
      case BoundId::sandwich: sel = {&find("sandwich_lower"), &find("sandwich_upper")}; break;
      case BoundId::lb1: sel = {&find("lower_bound_1")}; break;
      case BoundId::lb54_v2: sel = {&find("lower_bound_5_4_diamV2")}; break;
      case BoundId::lb54_g2: sel = {&find("lower_bound_5_4_diamG2")}; break;
      case BoundId::lb32_v3: sel = {&find("lower_bound_3_2_diamV3")}; break;
      case BoundId::equality: sel = {&find("upper_bound_equality")}; break;
      default: break;
    }
    bool applicable = false, holds = true;
    std::string detail;
    for (const auto* br : sel) {
      applicable = applicable || br->applicable;
      if (br->applicable && !br->holds) holds = false, detail = br->detail;
    }
    if (!applicable) continue;
    expect(r, holds, ctx.pair_input(p), sel.front()->detail, holds ? Json(qs(dp)) : Json(detail));
  }
  return r;
}

inline CheckResult tree_table_partition(SuiteContext& ctx) {
  CheckResult r;
  const auto& c = ctx.corpus();
  for (std::size_t p = 0; p < c.pairs.size(); ++p) {
    const auto [a, b] = c.pairs[p];
    if (!ctx.g(a).is_tree()) continue;
    const auto rows = tree_lex_rows(tree_lex_inputs(ctx.g(a), ctx.g(b)));
    expect(r, rows.size() == 1, ctx.pair_input(p), "exactly one row", rows);
  }
  return r;
}

inline CheckResult tree_lex_oracle(SuiteContext& ctx) {
  CheckResult r;
  const auto& c = ctx.corpus();
  for (std::size_t p : ctx.capped_pairs()) {
    const auto [a, b] = c.pairs[p];
    if (!ctx.g(a).is_tree()) continue;
    const auto tc = tree_lex_delta(ctx.g(a), ctx.g(b));
    const auto d = ctx.delta(ctx.lex(p).graph()).value;
    Json in = ctx.pair_input(p);
    in["case"] = tc.label;
    expect(r, tc.value == d, in, qs(d), qs(tc.value));
  }
  return r;
}

inline CheckResult F_characterization(SuiteContext& ctx) {
  CheckResult r;
  const auto& c = ctx.corpus();
  for (std::size_t p : ctx.capped_pairs()) {
    const auto [a, b] = c.pairs[p];
    const Graph &g1 = ctx.g(a), &g2 = ctx.g(b);
    if (!g1.is_tree() || g2.is_trivial()) continue;
    const auto dv = diameters(g1).vertex;
    if (dv != qd::one && dv != QDist::from_units(2)) continue;
    const bool at_top = ctx.delta(ctx.lex(p).graph()).value == qd::three_halves;
    const bool inF = ctx.in_F(g2);
    expect(r, at_top == inF, ctx.pair_input(p), Json{{"in_F", inF}}, Json{{"delta_is_3/2", at_top}});
  }
  return r;
}

/// Membership agrees with the existence of a cycle triangle with sides <= 3
/// and a vertex at distance 3/2 from the other two sides.
inline CheckResult F_triangle_lemma(SuiteContext& ctx) {
  CheckResult r;
  for (const auto& it : ctx.items()) {
    const bool reached = ctx.delta(*it.graph, Mode::side3).value == qd::three_halves;
    const bool inF = ctx.in_F(*it.graph);
    expect(r, reached == inF, it.inputs, Json{{"in_F", inF}}, Json{{"short_triangle_3/2", reached}});
  }
  return r;
}

inline CheckResult catalog_sanity(SuiteContext&) {
  CheckResult r;
  const auto raw = build_catalog(false);
  const auto& cat = default_catalog();
  expect(r, raw.members.size() == 68, Json{{"catalog", "raw"}}, 68, raw.members.size());
  std::set<std::string> forms;
  for (std::size_t i = 0; i < cat.members.size(); ++i) {
    const auto& m = cat.members[i];
    const std::size_t n = m.graph.vertex_count();
    bool spanning_cycle = n >= 6 && n <= 9;
    for (Vertex v = 0; v < n && spanning_cycle; ++v)
      spanning_cycle = m.graph.has_edge(v, static_cast<Vertex>((v + 1) % n));
    InducedMatcher self(m.graph, m.graph);
    const auto subset = self.min_subset();
    const bool whole = subset && subset->size() == n;
    const bool member = in_family_F(m.graph).member;
    const bool fresh = forms.insert(canonical_form(m.graph)).second;
    Json in{{"member", i}, {"family", m.family_tag}};
    expect(r, spanning_cycle && whole && member && fresh, in, "member of F, own witness is all vertices, unique",
           Json{{"spanning_cycle", spanning_cycle}, {"self_witness_all", whole}, {"in_F", member}, {"unique", fresh}});
  }
  return r;
}

/// Adding vertices to a member of F keeps it in F.
inline CheckResult F_monotonicity(SuiteContext& ctx) {
  CheckResult r;
  Rng rng(ctx.corpus().spec.seed ^ 0x9e3779b97f4a7c15ull);
  for (std::size_t i = 0; i < ctx.corpus().graphs.size(); ++i) {
    const Graph& g = ctx.g(i);
    if (!ctx.in_F(g)) continue;
    const auto n = static_cast<Vertex>(g.vertex_count());
    std::vector<Edge> pendant = g.edges();
    pendant.emplace_back(static_cast<Vertex>(rng.below(n)), n);
    std::vector<Edge> cone = g.edges();
    for (Vertex v = 0; v < n; ++v) cone.emplace_back(v, n);
    for (const auto& edges : {pendant, cone}) {
      const Graph h = Graph::make(n + 1, edges);
      const bool inF = in_family_F(h).member;
      Json in = ctx.single_input(i);
      in["supergraph_edges"] = edges_json(h);
      expect(r, inF, in, true, inF);
    }
  }
  return r;
}

}  // namespace checks

using CheckFn = std::function<CheckResult(SuiteContext&)>;

inline const std::vector<std::pair<std::string, CheckFn>>& check_registry() {
  using namespace checks;
  static const std::vector<std::pair<std::string, CheckFn>> reg{
      {"metric_axioms", metric_axioms},
      {"subdivision_scaling", subdivision_scaling},
      {"diam_bounds", diam_bounds},
      {"diam_S8_crosscheck", diam_S8_crosscheck},
      {"dist_formula", dist_formula},
      {"lex_adjacency", lex_adjacency},
      {"edge_containment", edge_containment},
      {"copy_isometry", copy_isometry},
      {"neighborhood_3_2", neighborhood_3_2},
      {"geodesic_copy_5_2", [](SuiteContext& c) { return geodesic_copy(c, CopyCase::up_to_5_2); }},
      {"geodesic_copy_gt3", [](SuiteContext& c) { return geodesic_copy(c, CopyCase::beyond_3); }},
      {"geodesic_copy_midpoints_3", [](SuiteContext& c) { return geodesic_copy(c, CopyCase::midpoints_at_3); }},
      {"projection_geodesic", projection_geodesic},
      {"isometric_subproduct", isometric_subproduct},
      {"quarter_multiple", quarter_multiple},
      {"delta_diam_half", delta_diam_half},
      {"tree_delta_zero", tree_delta_zero},
      {"cycle_delta_n_4", cycle_delta_n_4},
      {"examples_Pn_P2", examples_Pn_P2},
      {"examples_Cn_P2", examples_Cn_P2},
      {"example_complete", example_complete},
      {"grid_stability_S8", grid_stability_S8},
      {"cycle_only_equivalence", cycle_only_equivalence},
      {"bigon_lower_bound", bigon_lower_bound},
      {"isometric_monotonicity", isometric_monotonicity},
      {"witness_validity", witness_validity},
      {"sandwich_bounds", [](SuiteContext& c) { return bounds(c, BoundId::sandwich); }},
      {"lower_bound_1", [](SuiteContext& c) { return bounds(c, BoundId::lb1); }},
      {"lower_bound_5_4_diamV2", [](SuiteContext& c) { return bounds(c, BoundId::lb54_v2); }},
      {"lower_bound_5_4_diamG2", [](SuiteContext& c) { return bounds(c, BoundId::lb54_g2); }},
      {"lower_bound_3_2_diamV3", [](SuiteContext& c) { return bounds(c, BoundId::lb32_v3); }},
      {"upper_bound_tightness", [](SuiteContext& c) { return bounds(c, BoundId::strict_upper); }},
      {"upper_bound_equality", [](SuiteContext& c) { return bounds(c, BoundId::equality); }},
      {"tree_table_partition", tree_table_partition},
      {"tree_lex_oracle", tree_lex_oracle},
      {"F_characterization", F_characterization},
      {"F_triangle_lemma", F_triangle_lemma},
      {"catalog_sanity", catalog_sanity},
      {"F_monotonicity", F_monotonicity},
  };
  return reg;
}

inline std::vector<std::string> check_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : check_registry()) ids.push_back(id);
  return ids;
}

/// Runs the selected checks (all when `checks` is empty). A check that throws
/// is recorded as a failure carrying the error; the suite always completes.
inline SuiteReport run_suite(const Corpus& corpus, const std::vector<std::string>& checks = {}) {
  const auto& reg = check_registry();
  for (const auto& id : checks) {
    if (std::none_of(reg.begin(), reg.end(), [&](const auto& kv) { return kv.first == id; }))
      throw ValidationError("unknown check id '" + id + "'");
  }
  SuiteContext ctx(corpus);
  SuiteReport rep;
  for (const auto& [id, fn] : reg) {
    if (!checks.empty() && std::find(checks.begin(), checks.end(), id) == checks.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    CheckResult res;
    try {
      res = fn(ctx);
    } catch (const std::exception& e) {
      res.failures.push_back({Json{{"seed", corpus.spec.seed}}, "check completes", std::string("error: ") + e.what()});
    }
    res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rep.results[id] = std::move(res);
  }
  return rep;
}

}  // namespace lexhyp
