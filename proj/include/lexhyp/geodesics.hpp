#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lexhyp/error.hpp"
#include "lexhyp/graph.hpp"
#include "lexhyp/subdivision.hpp"

namespace lexhyp {

using Path = std::vector<Vertex>;

inline constexpr std::size_t kDefaultGeodesicCap = 1'000'000;

namespace detail {

/// All shortest a-b paths, by backtracking over the shortest-path DAG.
/// `to_b[v]` must be the hop distance from v to b. Successors are taken in
/// increasing id order, so paths come out lexicographically sorted.
template <typename AdjFn>
std::vector<Path> backtrack_geodesics(AdjFn&& neighbors, Vertex a, Vertex b, std::span<const std::uint32_t> to_b,
                                      std::size_t cap) {
  std::vector<Path> out;
  if (to_b[a] == kUnreachable) return out;
  Path current{a};
  // Explicit stack of (vertex, next neighbour slot).
  std::vector<std::size_t> slot{0};
  while (!current.empty()) {
    const Vertex v = current.back();
    if (v == b) {
      if (out.size() == cap) throw CapExceeded(a, b);
      out.push_back(current);
      current.pop_back();
      slot.pop_back();
      continue;
    }
    auto nbrs = neighbors(v);
    std::size_t& i = slot.back();
    while (i < nbrs.size() && to_b[nbrs[i]] + 1 != to_b[v]) ++i;
    if (i == nbrs.size()) {
      current.pop_back();
      slot.pop_back();
      continue;
    }
    const Vertex w = nbrs[i++];
    current.push_back(w);
    slot.push_back(0);
  }
  return out;
}

}  // namespace detail

/// Every geodesic between grid vertices a and b in lexicographic order of
/// vertex sequences. Throws CapExceeded when there are more than `cap`.
inline std::vector<Path> enumerate_geodesics(const SubdividedGraph& s, Vertex a, Vertex b,
                                             std::size_t cap = kDefaultGeodesicCap) {
  if (cap < 1) throw ValidationError("geodesic cap must be at least 1");
  if (a >= s.size() || b >= s.size()) throw ValidationError("grid vertex out of range");
  const auto to_b = s.bfs(b);
  return detail::backtrack_geodesics([&](Vertex v) { return s.neighbors(v); }, a, b, to_b, cap);
}

/// Same, with distances to b read from a precomputed all-pairs matrix.
inline std::vector<Path> enumerate_geodesics(const SubdividedGraph& s, const GraphMetrics& m, Vertex a, Vertex b,
                                             std::size_t cap = kDefaultGeodesicCap) {
  const auto row = m.row(b);
  std::vector<std::uint32_t> to_b(row.begin(), row.end());
  return detail::backtrack_geodesics([&](Vertex v) { return s.neighbors(v); }, a, b, to_b, cap);
}

/// Vertex-level geodesics of a plain graph (the k = 1 view).
inline std::vector<Path> enumerate_geodesics(const Graph& g, Vertex a, Vertex b,
                                             std::size_t cap = kDefaultGeodesicCap) {
  if (cap < 1) throw ValidationError("geodesic cap must be at least 1");
  if (a >= g.vertex_count() || b >= g.vertex_count()) throw ValidationError("vertex out of range");
  const auto to_b = g.bfs(b);
  return detail::backtrack_geodesics([&](Vertex v) { return g.neighbors(v); }, a, b, to_b, cap);
}

}  // namespace lexhyp
