#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexhyp/error.hpp"
#include "lexhyp/graph.hpp"
#include "lexhyp/qdist.hpp"

namespace lexhyp {

enum class ProductKind { lexicographic, cartesian, strong };

inline std::string_view to_string(ProductKind k) {
  switch (k) {
    case ProductKind::lexicographic: return "lex";
    case ProductKind::cartesian: return "cart";
    case ProductKind::strong: return "strong";
  }
  return "?";
}

inline constexpr std::size_t kDefaultProductCap = 4096;

/// A two-factor graph product with its coordinate bookkeeping.
/// Product vertex (u, v) has id u * |V(G2)| + v.
class ProductGraph {
 public:
  ProductGraph(Graph graph, Graph factor1, Graph factor2, ProductKind kind)
      : graph_(std::move(graph)), f1_(std::move(factor1)), f2_(std::move(factor2)), kind_(kind) {}

  const Graph& graph() const noexcept { return graph_; }
  const Graph& factor1() const noexcept { return f1_; }
  const Graph& factor2() const noexcept { return f2_; }
  ProductKind kind() const noexcept { return kind_; }

  Vertex index(Vertex u, Vertex v) const {
    if (u >= f1_.vertex_count() || v >= f2_.vertex_count()) throw ValidationError("coordinate out of range");
    return static_cast<Vertex>(u * f2_.vertex_count() + v);
  }
  std::pair<Vertex, Vertex> coords(Vertex p) const {
    if (p >= graph_.vertex_count()) throw ValidationError("product vertex out of range");
    const auto n2 = static_cast<Vertex>(f2_.vertex_count());
    return {p / n2, p % n2};
  }

 private:
  Graph graph_;
  Graph f1_;
  Graph f2_;
  ProductKind kind_;
};

inline ProductGraph product(const Graph& g1, const Graph& g2, ProductKind kind,
                            std::size_t cap = kDefaultProductCap) {
  const std::size_t n1 = g1.vertex_count();
  const std::size_t n2 = g2.vertex_count();
  if (n1 * n2 > cap) {
    throw SizeError("product has " + std::to_string(n1 * n2) + " vertices, cap is " + std::to_string(cap));
  }
  auto id = [n2](Vertex u, Vertex v) { return static_cast<Vertex>(u * n2 + v); };
  std::vector<Edge> edges;
  // Same first coordinate, adjacent second: present in all three products.
  for (Vertex u = 0; u < n1; ++u)
    for (auto [a, b] : g2.edges()) edges.emplace_back(id(u, a), id(u, b));
  for (auto [u1, u2] : g1.edges()) {
    for (Vertex v1 = 0; v1 < n2; ++v1) {
      for (Vertex v2 = 0; v2 < n2; ++v2) {
        const bool same = v1 == v2;
        const bool adjacent = !same && g2.has_edge(v1, v2);
        bool include = false;
        switch (kind) {
          case ProductKind::lexicographic: include = true; break;
          case ProductKind::cartesian: include = same; break;
          case ProductKind::strong: include = same || adjacent; break;
        }
        if (include) edges.emplace_back(id(u1, v1), id(u2, v2));
      }
    }
  }
  return ProductGraph(Graph::make(n1 * n2, std::move(edges)), g1, g2, kind);
}

/// First coordinate of a product vertex.
inline Vertex project(const ProductGraph& p, Vertex vertex) { return p.coords(vertex).first; }

/// Closed-form vertex distance in G1 o G2 from precomputed factor distance
/// matrices (row-major, as produced by Graph::distance_matrix()).
inline QDist lex_distance(std::span<const std::uint32_t> d1, std::size_t n1, std::span<const std::uint32_t> d2,
                          std::size_t n2, std::pair<Vertex, Vertex> a, std::pair<Vertex, Vertex> b) {
  if (n1 < 2) throw ValidationError("lex_distance needs a non-trivial first factor; E1 o G is isomorphic to G");
  if (a.first >= n1 || b.first >= n1 || a.second >= n2 || b.second >= n2) {
    throw ValidationError("coordinate out of range");
  }
  if (a.first == b.first) {
    return QDist::from_units(std::min<std::uint32_t>(2, d2[a.second * n2 + b.second]));
  }
  return QDist::from_units(d1[a.first * n1 + b.first]);
}

inline QDist lex_distance(const Graph& g1, const Graph& g2, std::pair<Vertex, Vertex> a,
                          std::pair<Vertex, Vertex> b) {
  if (g1.is_trivial()) throw ValidationError("lex_distance needs a non-trivial first factor; E1 o G is isomorphic to G");
  if (a.first >= g1.vertex_count() || b.first >= g1.vertex_count() || a.second >= g2.vertex_count() ||
      b.second >= g2.vertex_count()) {
    throw ValidationError("coordinate out of range");
  }
  if (a.first == b.first) return QDist::from_units(std::min<std::uint32_t>(2, g2.bfs(a.second)[b.second]));
  return QDist::from_units(g1.bfs(a.first)[b.first]);
}

}  // namespace lexhyp
