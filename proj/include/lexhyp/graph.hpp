#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexhyp/error.hpp"

namespace lexhyp {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;  // always stored with first < second

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Simple undirected graph with unit-length edges and vertices 0..n-1.
///
/// Instances built through `Graph::make` are validated: no loops, no duplicate
/// edges, at least one vertex, connected. `Graph::make_unchecked_connectivity`
/// skips only the connectivity test and is reserved for induced subgraphs.
class Graph {
 public:
  Graph() = default;

  static Graph make(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels = {}) {
    Graph g = build(n, std::move(edges), std::move(labels));
    if (!g.is_connected()) throw ValidationError("graph is disconnected");
    return g;
  }

  static Graph make_unchecked_connectivity(std::size_t n, std::vector<Edge> edges,
                                           std::vector<std::string> labels = {}) {
    return build(n, std::move(edges), std::move(labels));
  }

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  bool has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

  /// Position of edge {a,b} in `edges()`, if present.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const {
    if (a == b || a >= vertex_count() || b >= vertex_count()) return std::nullopt;
    const Edge key{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  bool is_trivial() const noexcept { return vertex_count() == 1; }

  bool is_connected() const {
    if (adj_.empty()) return false;
    std::vector<char> seen(vertex_count(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adj_[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == vertex_count();
  }

  /// Structural tree test: connected with m = n - 1.
  bool is_tree() const { return is_connected() && edge_count() + 1 == vertex_count(); }

  /// Hop distances from `source`; unreachable vertices get kUnreachable.
  std::vector<std::uint32_t> bfs(Vertex source) const {
    std::vector<std::uint32_t> dist(vertex_count(), kUnreachable);
    std::vector<Vertex> queue;
    queue.reserve(vertex_count());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex w : adj_[v]) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    return dist;
  }

  /// Dense row-major hop-distance matrix (vertex level only).
  std::vector<std::uint32_t> distance_matrix() const {
    const std::size_t n = vertex_count();
    std::vector<std::uint32_t> out(n * n);
    for (Vertex s = 0; s < n; ++s) {
      auto row = bfs(s);
      std::copy(row.begin(), row.end(), out.begin() + static_cast<std::ptrdiff_t>(s * n));
    }
    return out;
  }

  /// Largest vertex-to-vertex hop distance (diam V(G)).
  std::uint32_t vertex_diameter() const {
    std::uint32_t best = 0;
    for (Vertex s = 0; s < vertex_count(); ++s) {
      for (auto d : bfs(s)) {
        if (d != kUnreachable) best = std::max(best, d);
      }
    }
    return best;
  }

  /// Edge list text, one "u v" per line, readable back by parse_graph.
  std::string to_edge_list() const {
    std::ostringstream os;
    for (auto [a, b] : edges_) os << a << ' ' << b << '\n';
    return os.str();
  }

  bool operator==(const Graph& o) const { return edges_ == o.edges_ && adj_.size() == o.adj_.size(); }

 private:
  static Graph build(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels) {
    if (n == 0) throw ValidationError("graph must have at least one vertex");
    if (!labels.empty() && labels.size() != n) {
      throw ValidationError("label count does not match vertex count");
    }
    Graph g;
    g.adj_.assign(n, {});
    for (auto& [a, b] : edges) {
      if (a >= n || b >= n) {
        throw ValidationError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                              ") references a vertex outside 0.." + std::to_string(n - 1));
      }
      if (a == b) throw ValidationError("self-loop at vertex " + std::to_string(a));
      if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) {
      throw ValidationError("duplicate edge (" + std::to_string(dup->first) + "," +
                            std::to_string(dup->second) + ")");
    }
    for (auto [a, b] : edges) {
      g.adj_[a].push_back(b);
      g.adj_[b].push_back(a);
    }
    for (auto& row : g.adj_) std::sort(row.begin(), row.end());
    g.edges_ = std::move(edges);
    g.labels_ = std::move(labels);
    return g;
  }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

// --- generators -----------------------------------------------------------

namespace gen {

inline Graph trivial() { return Graph::make(1, {}); }

inline Graph path(std::size_t n) {
  if (n == 0) throw ValidationError("path:n requires n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::make(n, std::move(e));
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw ValidationError("cycle:n requires n >= 3");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::make(n, std::move(e));
}

inline Graph complete(std::size_t n) {
  if (n == 0) throw ValidationError("complete:n requires n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::make(n, std::move(e));
}

/// Star with `leaves` leaves around centre 0.
inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::make(leaves + 1, std::move(e));
}

}  // namespace gen

// --- parsing --------------------------------------------------------------

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::optional<std::size_t> parse_size(std::string_view s) {
  if (s.empty() || s.size() > 12) return std::nullopt;
  std::size_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

}  // namespace detail

/// Expands a generator term (`path:n`, `cycle:n`, `complete:n`, `star:n`,
/// `trivial`). Returns nullopt when `term` is not generator syntax at all.
inline std::optional<Graph> parse_generator(std::string_view term) {
  term = detail::trim(term);
  if (term == "trivial") return gen::trivial();
  const auto colon = term.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const auto name = term.substr(0, colon);
  if (name != "path" && name != "cycle" && name != "complete" && name != "star") return std::nullopt;
  const auto n = detail::parse_size(term.substr(colon + 1));
  if (!n) throw ParseError("bad size in generator '" + std::string(term) + "'");
  if (name == "path") return gen::path(*n);
  if (name == "cycle") return gen::cycle(*n);
  if (name == "complete") return gen::complete(*n);
  return gen::star(*n);
}

/// Parses either a generator term or an edge list.
///
/// Edge list: one edge per line as two whitespace-separated non-negative
/// integers; '#' comment lines and blank lines are ignored. The vertex count
/// is one more than the largest id mentioned; labels are the decimal ids.
inline Graph parse_graph(std::string_view text) {
  if (auto g = parse_generator(text)) return *std::move(g);

  std::vector<Edge> edges;
  std::size_t max_id = 0;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::istringstream ls{std::string(t)};
    std::string a, b, extra;
    ls >> a >> b;
    if (b.empty() || (ls >> extra)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two vertex ids");
    }
    auto ia = detail::parse_size(a);
    auto ib = detail::parse_size(b);
    if (!ia || !ib) throw ParseError("line " + std::to_string(line_no) + ": vertex ids must be non-negative integers");
    if (*ia > std::numeric_limits<Vertex>::max() / 2 || *ib > std::numeric_limits<Vertex>::max() / 2) {
      throw ParseError("line " + std::to_string(line_no) + ": vertex id too large");
    }
    edges.emplace_back(static_cast<Vertex>(*ia), static_cast<Vertex>(*ib));
    max_id = std::max({max_id, *ia, *ib});
  }
  if (edges.empty()) throw ParseError("no edges found (use 'trivial' for the one-vertex graph)");
  const std::size_t n = max_id + 1;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Graph::make(n, std::move(edges), std::move(labels));
}

// --- subgraphs ------------------------------------------------------------

/// The subgraph induced by `subset` (order of `subset` defines the new vertex
/// ids). The result may be disconnected.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  if (subset.empty()) throw ValidationError("induced subgraph of an empty vertex set");
  std::vector<std::uint32_t> pos(g.vertex_count(), kUnreachable);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= g.vertex_count()) throw ValidationError("subset vertex out of range");
    if (pos[subset[i]] != kUnreachable) throw ValidationError("subset contains a repeated vertex");
    pos[subset[i]] = static_cast<std::uint32_t>(i);
  }
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    if (pos[a] != kUnreachable && pos[b] != kUnreachable) edges.emplace_back(pos[a], pos[b]);
  }
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    for (Vertex v : subset) labels.push_back(g.labels()[v]);
  }
  return Graph::make_unchecked_connectivity(subset.size(), std::move(edges), std::move(labels));
}

/// True iff the vertex injection `map` (h-vertex -> g-vertex) preserves all
/// pairwise distances. Throws when `map` is not an injective subgraph map.
inline bool is_isometric_embedding(const Graph& h, const Graph& g, std::span<const Vertex> map) {
  if (map.size() != h.vertex_count()) throw ValidationError("map size must equal |V(h)|");
  std::vector<char> used(g.vertex_count(), 0);
  for (Vertex v : map) {
    if (v >= g.vertex_count()) throw ValidationError("map target out of range");
    if (used[v]) throw ValidationError("map is not injective");
    used[v] = 1;
  }
  for (auto [a, b] : h.edges()) {
    if (!g.has_edge(map[a], map[b])) {
      throw ValidationError("not a subgraph: edge (" + std::to_string(a) + "," + std::to_string(b) +
                            ") has no image edge");
    }
  }
  for (Vertex a = 0; a < h.vertex_count(); ++a) {
    const auto dh = h.bfs(a);
    const auto dg = g.bfs(map[a]);
    for (Vertex b = 0; b < h.vertex_count(); ++b) {
      if (dh[b] != dg[map[b]]) return false;
    }
  }
  return true;
}

}  // namespace lexhyp
