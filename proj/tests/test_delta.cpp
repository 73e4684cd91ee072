#include <gtest/gtest.h>

#include "lexhyp/delta.hpp"
#include "lexhyp/geodesics.hpp"
#include "lexhyp/gspec.hpp"
#include "lexhyp/harness.hpp"
#include "oracle.hpp"

using namespace lexhyp;

namespace {

QDist delta(const Graph& g, DeltaConfig cfg = {}) { return delta_exact(g, cfg).value; }

QDist q(std::int64_t quarters) { return QDist::from_quarters(quarters); }

// Small graphs where exhaustive search over every geodesic triangle is cheap.
std::vector<std::string> oracle_specs() {
  return {"path:2",     "path:5",     "star:3",      "cycle:3",        "cycle:4",           "cycle:5",
          "cycle:6",    "cycle:7",    "complete:4",  "complete:5",     "lex(path:2,path:2)", "lex(path:3,path:2)",
          "lex(path:2,path:3)", "lex(cycle:3,path:2)", "cart(path:3,path:2)", "cart(path:3,path:3)",
          "strong(path:3,path:2)", "0 1\n1 2\n2 0\n2 3\n3 4\n4 2\n", "0 1\n1 2\n2 3\n3 0\n0 2\n",
          "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n0 3\n"};
}

}  // namespace

TEST(Geodesics, Counts) {
  EXPECT_EQ(enumerate_geodesics(gen::cycle(4), 0, 2).size(), 2u);
  EXPECT_EQ(enumerate_geodesics(gen::path(3), 0, 2).size(), 1u);
  for (Vertex b = 1; b < 4; ++b) EXPECT_EQ(enumerate_geodesics(gen::complete(4), 0, b).size(), 1u);
  EXPECT_THROW(enumerate_geodesics(gen::cycle(4), 0, 2, 1), CapExceeded);
  const auto s = subdivide(gen::cycle(6), 4);
  const auto paths = enumerate_geodesics(s, 0, 3);
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_LT(paths[0], paths[1]);
  EXPECT_EQ(paths[0].size(), 13u);
}

TEST(Delta, SpecExamples) {
  EXPECT_EQ(delta(gen::path(6)), qd::zero);
  EXPECT_EQ(delta(gen::cycle(5)), q(5));
  EXPECT_EQ(delta(gen::cycle(4)), qd::one);
  EXPECT_EQ(delta(product(gen::path(2), gen::path(2), ProductKind::lexicographic).graph()), qd::one);
  EXPECT_EQ(delta(gen::trivial()), qd::zero);
}

TEST(Delta, CyclesAreNOverFour) {
  for (std::size_t n = 3; n <= 10; ++n) EXPECT_EQ(delta(gen::cycle(n)), q(std::int64_t(n))) << "cycle " << n;
}

TEST(Delta, CompleteGraphs) {
  EXPECT_EQ(delta(gen::complete(2)), qd::zero);
  EXPECT_EQ(delta(gen::complete(3)), q(3));
  for (std::size_t n = 4; n <= 7; ++n) EXPECT_EQ(delta(gen::complete(n)), qd::one);
}

TEST(Delta, MatchesExhaustiveOracle) {
  for (const auto& spec : oracle_specs()) {
    const Graph g = spec.find(':') != std::string::npos || spec.find('(') != std::string::npos ? parse_gspec(spec)
                                                                                               : parse_graph(spec);
    const auto want = oracle::delta_quarters(g);
    EXPECT_EQ(delta(g).quarters(), want) << spec;
    DeltaConfig all;
    all.cycle_only = false;
    EXPECT_EQ(delta(g, all).quarters(), want) << spec;
    EXPECT_EQ(oracle::delta_quarters(g, true), want) << "cycle triangles alone reach the maximum on " << spec;
  }
}

TEST(Delta, MatchesOracleOnRandomGraphs) {
  Rng rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_connected(rng.between(3, 6), rng.between(0, 3), rng);
    EXPECT_EQ(delta(g).quarters(), oracle::delta_quarters(g)) << g.to_edge_list();
  }
}

TEST(Delta, FinerGridAgrees) {
  DeltaConfig s8;
  s8.grid_factor = 8;
  for (const char* spec : {"cycle:5", "cycle:6", "complete:4", "lex(path:3,path:2)", "lex(cycle:4,path:2)",
                           "lex(path:4,path:2)", "cart(path:3,path:3)"}) {
    const Graph g = parse_gspec(spec);
    const auto r8 = delta_exact(g, s8);
    EXPECT_EQ(r8.value, delta(g)) << spec;
    EXPECT_EQ(r8.grid_factor, 8);
  }
}

TEST(Delta, WitnessReproducesValue) {
  for (const auto& spec : oracle_specs()) {
    const Graph g = spec.find(':') != std::string::npos || spec.find('(') != std::string::npos ? parse_gspec(spec)
                                                                                               : parse_graph(spec);
    const auto r = delta_exact(g);
    ASSERT_TRUE(r.witness.has_value()) << spec;
    const auto s = subdivide(g, 4);
    EXPECT_NO_THROW(validate_triangle(s, *r.witness));
    EXPECT_EQ(thinness(s, *r.witness).value(), r.value) << spec;
    EXPECT_TRUE(r.witness->is_cycle || r.value == qd::zero) << spec;

    // Re-measure with the test's own grid, which uses the same numbering.
    const auto oq = oracle::quarter(g);
    const auto& w = r.witness->sides;
    for (const auto& side : w)
      for (std::size_t i = 0; i + 1 < side.size(); ++i) ASSERT_EQ(oq.d[side[i]][side[i + 1]], 1);
    const std::vector<int> a(w[0].begin(), w[0].end()), b(w[1].begin(), w[1].end()), c(w[2].begin(), w[2].end());
    const int worst = std::max({oracle::side_thinness(oq, a, b, c), oracle::side_thinness(oq, b, c, a),
                                oracle::side_thinness(oq, c, a, b)});
    EXPECT_EQ(worst, r.value.quarters()) << spec;
  }
}

TEST(Delta, ParallelIsIdentical) {
  DeltaConfig par;
  par.parallel = true;
  for (const char* spec : {"cycle:7", "lex(cycle:5,path:2)", "lex(star:3,cycle:4)", "complete:6"}) {
    const Graph g = parse_gspec(spec);
    const auto a = delta_exact(g);
    const auto b = delta_exact(g, par);
    EXPECT_EQ(a.value, b.value);
    ASSERT_TRUE(a.witness && b.witness);
    EXPECT_EQ(a.witness->corners, b.witness->corners) << spec;
    EXPECT_EQ(a.witness->sides, b.witness->sides) << spec;
    EXPECT_EQ(a.witness_point, b.witness_point);
  }
}

TEST(Delta, CapExceededCarriesLowerBound) {
  DeltaConfig tight;
  tight.geodesic_cap = 1;
  const Graph g = gen::complete(6);
  try {
    delta_exact(g, tight);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_GE(e.lower_bound_quarters(), 0);
    EXPECT_LE(e.lower_bound_quarters(), delta(g).quarters());
  }
}

TEST(Delta, ConfigValidation) {
  DeltaConfig bad;
  bad.grid_factor = 2;
  EXPECT_THROW(delta_exact(gen::cycle(4), bad), ValidationError);
  bad = {};
  bad.geodesic_cap = 0;
  EXPECT_THROW(delta_exact(gen::cycle(4), bad), ValidationError);
  bad = {};
  bad.grid_cap = 10;
  EXPECT_THROW(delta_exact(gen::cycle(4), bad), SizeError);
}

TEST(Bigon, KnownValues) {
  EXPECT_EQ(delta_bigon_lower_bound(gen::cycle(4)), qd::one);
  EXPECT_EQ(delta_bigon_lower_bound(gen::cycle(6)), qd::three_halves);
  EXPECT_EQ(delta_bigon_lower_bound(gen::path(5)), qd::zero);
  EXPECT_EQ(delta_bigon_lower_bound(gen::star(4)), qd::zero);
}

TEST(Bigon, MatchesOracleAndBoundsDelta) {
  for (const auto& spec : oracle_specs()) {
    const Graph g = spec.find(':') != std::string::npos || spec.find('(') != std::string::npos ? parse_gspec(spec)
                                                                                               : parse_graph(spec);
    const auto b = delta_bigon_lower_bound(g);
    EXPECT_EQ(b.quarters(), oracle::bigon_quarters(g)) << spec;
    EXPECT_LE(b, delta(g)) << spec;
  }
}

TEST(Thinness, DegenerateTriangles) {
  const auto s = subdivide(gen::cycle(4), 4);
  GeodesicTriangle point{{0, 0, 0}, {Path{0}, Path{0}, Path{0}}, false};
  EXPECT_EQ(thinness(s, point).value(), qd::zero);

  const auto arcs = enumerate_geodesics(s, 0, 2);
  ASSERT_EQ(arcs.size(), 2u);
  Path back(arcs[1].rbegin(), arcs[1].rend());
  GeodesicTriangle bigon{{0, 2, 2}, {arcs[0], Path{2}, back}, false};
  EXPECT_EQ(thinness(s, bigon).value(), qd::one);

  const auto ts = subdivide(gen::star(3), 4);
  const auto a = enumerate_geodesics(ts, 1, 2).front();
  const auto b = enumerate_geodesics(ts, 2, 3).front();
  const auto c = enumerate_geodesics(ts, 3, 1).front();
  EXPECT_EQ(thinness(ts, GeodesicTriangle{{1, 2, 3}, {a, b, c}, false}).value(), qd::zero);
}

TEST(Thinness, RejectsMalformedTriangles) {
  const auto s = subdivide(gen::cycle(4), 4);
  GeodesicTriangle off_j{{4, 0, 0}, {Path{4, 0}, Path{0}, Path{0, 4}}, false};
  EXPECT_THROW(validate_triangle(s, off_j), ValidationError);
  const auto arcs = enumerate_geodesics(s, 0, 2);
  GeodesicTriangle wrong_end{{0, 2, 2}, {arcs[0], Path{2}, arcs[0]}, false};
  EXPECT_THROW(validate_triangle(s, wrong_end), ValidationError);
}

// Property: values are quarter-integers bounded by half the diameter, and
// isometric subgraphs never have a larger constant.
TEST(DeltaProperty, RandomGraphInvariants) {
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_connected(rng.between(2, 9), rng.between(0, 5), rng);
    const auto r = delta_exact(g);
    DeltaConfig s8;
    s8.grid_factor = 8;
    EXPECT_EQ(delta_exact(g, s8).hops % 2, 0u);
    EXPECT_LE(r.value.quarters() * 2, diameters(g).graph.quarters());
    if (g.is_tree()) EXPECT_EQ(r.value, qd::zero);
    EXPECT_LE(delta_bigon_lower_bound(g), r.value);
  }
}
