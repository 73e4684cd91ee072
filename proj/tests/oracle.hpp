#pragma once

// Slow reference implementations used only by the tests. Nothing here calls
// into the library beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "lexhyp/graph.hpp"

namespace oracle {

using lexhyp::Graph;
using lexhyp::Vertex;

inline std::vector<std::vector<int>> floyd_warshall(int n, const std::vector<std::pair<int, int>>& edges) {
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [a, b] : edges) d[a][b] = d[b][a] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  std::vector<std::pair<int, int>> e;
  for (auto [a, b] : g.edges()) e.emplace_back(int(a), int(b));
  return floyd_warshall(int(g.vertex_count()), e);
}

/// Quarter subdivision built from scratch: base vertices keep their ids, edge
/// i gets interior points n + 3i, n + 3i + 1, n + 3i + 2 walking from its
/// smaller endpoint.
struct Quarter {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<int>> d;
  std::vector<int> j_points;
};

inline Quarter quarter(const Graph& g) {
  Quarter q;
  const int n = int(g.vertex_count());
  const int m = int(g.edge_count());
  q.n = n + 3 * m;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i) {
    auto [a, b] = g.edges()[i];
    const int p = n + 3 * i;
    e.emplace_back(int(a), p);
    e.emplace_back(p, p + 1);
    e.emplace_back(p + 1, p + 2);
    e.emplace_back(p + 2, int(b));
  }
  q.adj.assign(q.n, {});
  for (auto [a, b] : e) {
    q.adj[a].push_back(b);
    q.adj[b].push_back(a);
  }
  q.d = floyd_warshall(q.n, e);
  for (int v = 0; v < n; ++v) q.j_points.push_back(v);
  for (int i = 0; i < m; ++i) q.j_points.push_back(n + 3 * i + 1);
  return q;
}

inline std::vector<std::vector<int>> all_geodesics(const Quarter& q, int a, int b) {
  std::vector<std::vector<int>> out;
  std::vector<int> path{a};
  std::function<void(int)> walk = [&](int v) {
    if (v == b) {
      out.push_back(path);
      return;
    }
    for (int w : q.adj[v]) {
      if (q.d[a][w] == q.d[a][v] + 1 && q.d[w][b] == q.d[v][b] - 1) {
        path.push_back(w);
        walk(w);
        path.pop_back();
      }
    }
  };
  walk(a);
  return out;
}

/// Max over every point of one side of its distance to the other two sides.
inline int side_thinness(const Quarter& q, const std::vector<int>& side, const std::vector<int>& o1,
                         const std::vector<int>& o2) {
  int worst = 0;
  for (int p : side) {
    int best = 1 << 28;
    for (int x : o1) best = std::min(best, q.d[p][x]);
    for (int x : o2) best = std::min(best, q.d[p][x]);
    worst = std::max(worst, best);
  }
  return worst;
}

/// True when the three sides meet pairwise exactly at their shared corners.
inline bool simple_cycle(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& c) {
  std::map<int, int> count;
  for (const auto* s : {&a, &b, &c})
    for (int v : *s) ++count[v];
  const std::set<int> corners{a.front(), b.front(), c.front()};
  if (corners.size() != 3) return false;
  for (auto [v, k] : count)
    if (k != (corners.count(v) ? 2 : 1)) return false;
  return true;
}

/// Hyperbolicity constant in quarter units by exhaustive search over all
/// J-corner triangles and all choices of geodesic sides.
inline std::int64_t delta_quarters(const Graph& g, bool cycles_only = false) {
  if (g.edge_count() == 0) return 0;
  const Quarter q = quarter(g);
  const auto& js = q.j_points;
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> geo;
  auto sides = [&](int a, int b) -> const std::vector<std::vector<int>>& {
    auto key = std::make_pair(a, b);
    auto it = geo.find(key);
    if (it == geo.end()) it = geo.emplace(key, all_geodesics(q, a, b)).first;
    return it->second;
  };
  int best = 0;
  for (std::size_t i = 0; i < js.size(); ++i)
    for (std::size_t j = i; j < js.size(); ++j)
      for (std::size_t k = j; k < js.size(); ++k) {
        const int x = js[i], y = js[j], z = js[k];
        for (const auto& a : sides(x, y))
          for (const auto& b : sides(y, z))
            for (const auto& c : sides(z, x)) {
              if (cycles_only && !simple_cycle(a, b, c)) continue;
              best = std::max({best, side_thinness(q, a, b, c), side_thinness(q, b, c, a),
                               side_thinness(q, c, a, b)});
            }
      }
  return best;
}

/// Largest bigon thinness in quarters: two geodesics between the same J points.
inline std::int64_t bigon_quarters(const Graph& g) {
  if (g.edge_count() == 0) return 0;
  const Quarter q = quarter(g);
  int best = 0;
  for (std::size_t i = 0; i < q.j_points.size(); ++i)
    for (std::size_t j = i + 1; j < q.j_points.size(); ++j) {
      const auto paths = all_geodesics(q, q.j_points[i], q.j_points[j]);
      for (const auto& a : paths)
        for (const auto& b : paths) best = std::max(best, side_thinness(q, a, b, b));
    }
  return best;
}

/// Continuum diameter in quarters (attained at J points).
inline std::int64_t diam_quarters(const Graph& g) {
  if (g.edge_count() == 0) return 0;
  const Quarter q = quarter(g);
  int best = 0;
  for (int a : q.j_points)
    for (int b : q.j_points) best = std::max(best, q.d[a][b]);
  return best;
}

/// Isomorphism by trying every bijection; for graphs up to about 8 vertices.
inline bool isomorphic(const Graph& a, const Graph& b) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges())
      if (!b.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Lex product adjacency straight from the definition.
inline bool lex_adjacent(const Graph& g1, const Graph& g2, Vertex a, Vertex b) {
  const auto n2 = Vertex(g2.vertex_count());
  const Vertex u1 = a / n2, v1 = a % n2, u2 = b / n2, v2 = b % n2;
  return g1.has_edge(u1, u2) || (u1 == u2 && g2.has_edge(v1, v2));
}

}  // namespace oracle
