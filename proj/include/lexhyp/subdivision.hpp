#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "lexhyp/error.hpp"
#include "lexhyp/graph.hpp"
#include "lexhyp/parallel.hpp"
#include "lexhyp/qdist.hpp"

namespace lexhyp {

/// Default ceiling on grid vertices for dense all-pairs matrices.
inline constexpr std::size_t kDefaultGridCap = 4096;

/// Where a grid vertex sits in the base graph: either a base vertex, or
/// `offset` steps (1..k-1) from the lower endpoint of base edge `edge`.
struct GridOrigin {
  bool is_base_vertex = true;
  std::uint32_t index = 0;   // base vertex id, or base edge index
  std::uint32_t offset = 0;  // 0 for base vertices
};

/// The k-fold edge subdivision S_k(G).
///
/// Grid ids: base vertices keep ids 0..n-1; the interior points of base edge
/// e = (u,v), u < v, get ids n + e*(k-1) + (j-1) for j = 1..k-1 steps from u.
/// `j_set` lists the vertices and edge midpoints, ascending.
class SubdividedGraph {
 public:
  SubdividedGraph(Graph base, int k, std::size_t grid_cap = kDefaultGridCap) : base_(std::move(base)), k_(k) {
    if (k != 1 && k != 2 && k != 4 && k != 8) throw ValidationError("subdivision factor must be 1, 2, 4 or 8");
    const std::size_t n = base_.vertex_count();
    const std::size_t m = base_.edge_count();
    const std::size_t total = n + static_cast<std::size_t>(k - 1) * m;
    if (total > grid_cap) {
      throw SizeError("subdivision S_" + std::to_string(k) + " has " + std::to_string(total) +
                      " grid vertices, cap is " + std::to_string(grid_cap));
    }
    adj_.assign(total, {});
    origin_.resize(total);
    for (Vertex v = 0; v < n; ++v) origin_[v] = {true, v, 0};
    const auto inner = static_cast<std::uint32_t>(k - 1);
    for (std::uint32_t e = 0; e < m; ++e) {
      auto [u, v] = base_.edges()[e];
      Vertex prev = u;
      for (std::uint32_t j = 1; j < static_cast<std::uint32_t>(k); ++j) {
        const auto id = static_cast<Vertex>(n + e * inner + (j - 1));
        origin_[id] = {false, e, j};
        link(prev, id);
        prev = id;
      }
      link(prev, v);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
    is_j_.assign(total, 0);
    for (Vertex v = 0; v < total; ++v) {
      const auto& o = origin_[v];
      if (o.is_base_vertex || 2 * o.offset == static_cast<std::uint32_t>(k)) {
        is_j_[v] = 1;
        j_set_.push_back(v);
      }
    }
  }

  const Graph& base() const noexcept { return base_; }
  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return adj_.size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  const GridOrigin& origin(Vertex v) const { return origin_[v]; }
  const std::vector<Vertex>& j_set() const noexcept { return j_set_; }
  bool in_j(Vertex v) const { return is_j_[v] != 0; }
  bool is_base_vertex(Vertex v) const { return v < base_.vertex_count(); }

  /// Grid id of the point `steps` (0..k) along base edge `e` from its lower endpoint.
  Vertex point_on_edge(std::size_t e, std::uint32_t steps) const {
    auto [u, v] = base_.edges()[e];
    if (steps == 0) return u;
    if (steps == static_cast<std::uint32_t>(k_)) return v;
    return static_cast<Vertex>(base_.vertex_count() + e * static_cast<std::size_t>(k_ - 1) + (steps - 1));
  }

  /// Grid id of the midpoint of base edge `e` (k >= 2).
  Vertex midpoint(std::size_t e) const { return point_on_edge(e, static_cast<std::uint32_t>(k_ / 2)); }

  std::vector<std::uint32_t> bfs(Vertex source) const {
    std::vector<std::uint32_t> dist(size(), kUnreachable);
    std::vector<Vertex> queue;
    queue.reserve(size());
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

  /// Hop distance from any vertex in `sources` (multi-source BFS).
  std::vector<std::uint32_t> bfs_from_set(std::span<const Vertex> sources) const {
    std::vector<std::uint32_t> dist(size(), kUnreachable);
    std::vector<Vertex> queue;
    queue.reserve(size());
    for (Vertex s : sources) {
      if (dist[s] == kUnreachable) {
        dist[s] = 0;
        queue.push_back(s);
      }
    }
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

 private:
  void link(Vertex a, Vertex b) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }

  Graph base_;
  int k_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<GridOrigin> origin_;
  std::vector<char> is_j_;
  std::vector<Vertex> j_set_;
};

inline SubdividedGraph subdivide(const Graph& g, int k, std::size_t grid_cap = kDefaultGridCap) {
  if (k != 2 && k != 4 && k != 8) throw ValidationError("subdivision factor must be 2, 4 or 8");
  return SubdividedGraph(g, k, grid_cap);
}

/// Dense all-pairs hop distances on a grid, plus diam V(G) and diam G.
///
/// Hops are stored as-is; `distance()` converts to quarters and therefore
/// requires the hop count to be a multiple of k/4 (always true for k <= 4).
class GraphMetrics {
 public:
  using Hop = std::uint16_t;

  GraphMetrics() = default;
  GraphMetrics(std::size_t n, int k, std::vector<Hop> hops) : n_(n), k_(k), hops_(std::move(hops)) {}

  std::size_t size() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  Hop hops(Vertex a, Vertex b) const { return hops_[static_cast<std::size_t>(a) * n_ + b]; }
  std::span<const Hop> row(Vertex a) const { return {hops_.data() + static_cast<std::size_t>(a) * n_, n_}; }
  QDist distance(Vertex a, Vertex b) const { return QDist::from_hops(hops(a, b), k_); }

  QDist diam_v() const { return diam_v_; }
  QDist diam_g() const { return diam_g_; }

 private:
  friend GraphMetrics all_pairs_distances(const SubdividedGraph&, bool);
  std::size_t n_ = 0;
  int k_ = 1;
  std::vector<Hop> hops_;
  QDist diam_v_;
  QDist diam_g_;
};

/// BFS from every grid vertex. diam_v is the maximum over base-vertex pairs,
/// diam_g the maximum over pairs of J-points.
inline GraphMetrics all_pairs_distances(const SubdividedGraph& s, bool parallel = false) {
  const std::size_t n = s.size();
  std::vector<GraphMetrics::Hop> hops(n * n);
  parallel_for(n, parallel, [&](std::size_t src) {
    const auto d = s.bfs(static_cast<Vertex>(src));
    auto* row = hops.data() + src * n;
    for (std::size_t j = 0; j < n; ++j) row[j] = static_cast<GraphMetrics::Hop>(d[j]);
  });
  GraphMetrics m(n, s.k(), std::move(hops));
  std::uint32_t dv = 0;
  for (Vertex a = 0; a < s.base().vertex_count(); ++a)
    for (Vertex b = a + 1; b < s.base().vertex_count(); ++b) dv = std::max<std::uint32_t>(dv, m.hops(a, b));
  std::uint32_t dg = 0;
  const auto& js = s.j_set();
  for (std::size_t i = 0; i < js.size(); ++i)
    for (std::size_t j = i + 1; j < js.size(); ++j) dg = std::max<std::uint32_t>(dg, m.hops(js[i], js[j]));
  m.diam_v_ = QDist::from_hops(dv, s.k());
  m.diam_g_ = QDist::from_hops(dg, s.k());
  return m;
}

/// diam V(G) and diam G of a base graph, via the S_2 grid.
struct Diameters {
  QDist vertex;
  QDist graph;
};

inline Diameters diameters(const Graph& g, std::size_t grid_cap = kDefaultGridCap) {
  if (g.is_trivial()) return {qd::zero, qd::zero};
  const auto m = all_pairs_distances(subdivide(g, 2, grid_cap));
  return {m.diam_v(), m.diam_g()};
}

}  // namespace lexhyp
