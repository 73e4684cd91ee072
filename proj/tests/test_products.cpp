#include <gtest/gtest.h>

#include "lexhyp/harness.hpp"
#include "lexhyp/product.hpp"
#include "oracle.hpp"

using namespace lexhyp;

namespace {

std::vector<Graph> small_graphs() {
  return {gen::trivial(), gen::path(2), gen::path(3), gen::path(4), gen::cycle(3), gen::cycle(5),
          gen::star(3),   gen::complete(4), parse_graph("0 1\n1 2\n2 0\n2 3\n")};
}

}  // namespace

TEST(Product, LexAdjacencyMatchesDefinition) {
  for (const auto& g1 : small_graphs())
    for (const auto& g2 : small_graphs()) {
      const auto p = product(g1, g2, ProductKind::lexicographic);
      const auto n = p.graph().vertex_count();
      ASSERT_EQ(n, g1.vertex_count() * g2.vertex_count());
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
          if (a != b) ASSERT_EQ(p.graph().has_edge(a, b), oracle::lex_adjacent(g1, g2, a, b));
    }
}

TEST(Product, EdgeCounts) {
  for (const auto& g1 : small_graphs())
    for (const auto& g2 : small_graphs()) {
      const std::size_t n1 = g1.vertex_count(), n2 = g2.vertex_count();
      const std::size_t m1 = g1.edge_count(), m2 = g2.edge_count();
      EXPECT_EQ(product(g1, g2, ProductKind::lexicographic).graph().edge_count(), n1 * m2 + m1 * n2 * n2);
      EXPECT_EQ(product(g1, g2, ProductKind::cartesian).graph().edge_count(), n1 * m2 + m1 * n2);
      EXPECT_EQ(product(g1, g2, ProductKind::strong).graph().edge_count(), n1 * m2 + m1 * n2 + 2 * m1 * m2);
    }
}

TEST(Product, Coordinates) {
  const auto p = product(gen::path(3), gen::cycle(4), ProductKind::lexicographic);
  EXPECT_EQ(p.index(2, 1), 9u);
  EXPECT_EQ(p.coords(9), (std::pair<Vertex, Vertex>{2, 1}));
  EXPECT_EQ(project(p, 9), 2u);
  EXPECT_THROW(p.index(3, 0), ValidationError);
  EXPECT_THROW(p.coords(12), ValidationError);
}

TEST(Product, SizeCap) {
  EXPECT_THROW(product(gen::path(10), gen::path(10), ProductKind::lexicographic, 99), SizeError);
  EXPECT_NO_THROW(product(gen::path(10), gen::path(10), ProductKind::lexicographic, 100));
}

TEST(Product, TrivialFactors) {
  const Graph c5 = gen::cycle(5);
  EXPECT_EQ(product(gen::trivial(), c5, ProductKind::lexicographic).graph(), c5);
  EXPECT_EQ(product(c5, gen::trivial(), ProductKind::lexicographic).graph(), c5);
}

TEST(LexDistance, MatchesFloydWarshall) {
  Rng rng(11);
  int pairs = 0;
  while (pairs < 40) {
    const Graph g1 = random_connected(rng.between(2, 6), rng.between(0, 3), rng);
    const Graph g2 = random_connected(rng.between(1, 5), rng.between(0, 3), rng);
    const auto p = product(g1, g2, ProductKind::lexicographic);
    const auto fw = oracle::floyd_warshall(p.graph());
    const auto n = p.graph().vertex_count();
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < n; ++b)
        ASSERT_EQ(lex_distance(g1, g2, p.coords(a), p.coords(b)), QDist::from_units(fw[a][b]));
    ++pairs;
  }
}

TEST(LexDistance, WithinOneCopyIsCappedAtTwo) {
  // Two vertices of one G2-copy are joined through any neighbouring copy.
  const Graph g2 = gen::path(6);
  EXPECT_EQ(lex_distance(gen::path(2), g2, {0, 0}, {0, 5}), QDist::from_units(2));
  EXPECT_EQ(lex_distance(gen::path(2), g2, {0, 0}, {0, 1}), QDist::from_units(1));
  EXPECT_EQ(lex_distance(gen::path(2), g2, {0, 3}, {0, 3}), qd::zero);
  EXPECT_EQ(lex_distance(gen::path(4), g2, {0, 2}, {3, 2}), QDist::from_units(3));
}

TEST(LexDistance, Errors) {
  EXPECT_THROW(lex_distance(gen::trivial(), gen::path(3), {0, 0}, {0, 2}), ValidationError);
  EXPECT_THROW(lex_distance(gen::path(2), gen::path(3), {2, 0}, {0, 2}), ValidationError);
  EXPECT_THROW(lex_distance(gen::path(2), gen::path(3), {0, 3}, {0, 2}), ValidationError);
}

TEST(Product, CopiesAreIsometric) {
  const Graph g1 = gen::star(3);
  const Graph g2 = parse_graph("0 1\n1 2\n2 3\n3 4\n4 0\n0 2\n");
  const auto p = product(g1, g2, ProductKind::lexicographic);
  for (Vertex v = 0; v < g2.vertex_count(); ++v) {
    std::vector<Vertex> map;
    for (Vertex u = 0; u < g1.vertex_count(); ++u) map.push_back(p.index(u, v));
    EXPECT_TRUE(is_isometric_embedding(g1, p.graph(), map));
  }
}
