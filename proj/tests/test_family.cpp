#include <gtest/gtest.h>

#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "lexhyp/family.hpp"
#include "lexhyp/harness.hpp"
#include "lexhyp/isomorphism.hpp"
#include "oracle.hpp"

using namespace lexhyp;

namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> e;
  for (auto [a, b] : g.edges()) e.emplace_back(perm[a], perm[b]);
  return Graph::make_unchecked_connectivity(g.vertex_count(), std::move(e));
}

Graph chorded_cycle(int n, const std::vector<Chord>& chords) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(Vertex(i), Vertex((i + 1) % n));
  for (auto [a, b] : chords) e.emplace_back(Vertex(a - 1), Vertex(b - 1));
  return Graph::make(std::size_t(n), std::move(e));
}

// Every sorted subset of 6..9 host vertices whose induced subgraph is
// isomorphic to a catalog member, keyed by member index.
std::map<std::size_t, std::vector<std::vector<Vertex>>> brute_matches(const Graph& g) {
  const auto& cat = default_catalog();
  std::map<std::string, std::size_t> forms;
  for (std::size_t i = 0; i < cat.members.size(); ++i) forms.emplace(canonical_form(cat.members[i].graph), i);
  std::map<std::size_t, std::vector<std::vector<Vertex>>> out;
  const std::size_t n = g.vertex_count();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size < 6 || size > 9) continue;
    std::vector<Vertex> subset;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1) subset.push_back(v);
    auto it = forms.find(canonical_form(induced_subgraph(g, subset)));
    if (it != forms.end()) out[it->second].push_back(subset);
  }
  for (auto& [i, subsets] : out) std::sort(subsets.begin(), subsets.end());
  return out;
}

}  // namespace

TEST(Canonical, AgreesWithPermutationSearch) {
  Rng rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = rng.between(3, 7);
    const Graph a = random_connected(n, rng.between(0, 5), rng);
    const Graph b = random_connected(n, a.edge_count() - (n - 1), rng);
    EXPECT_EQ(canonical_form(a) == canonical_form(b), oracle::isomorphic(a, b)) << a.to_edge_list() << "--\n"
                                                                               << b.to_edge_list();
  }
}

TEST(Canonical, InvariantUnderRelabelling) {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_connected(rng.between(2, 12), rng.between(0, 10), rng);
    std::vector<Vertex> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    EXPECT_EQ(canonical_form(g), canonical_form(relabel(g, perm)));
    EXPECT_TRUE(are_isomorphic(g, relabel(g, perm)));
  }
}

TEST(Canonical, DistinguishesSmallPairs) {
  EXPECT_FALSE(are_isomorphic(gen::cycle(6), parse_graph("0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n0 3\n")));
  EXPECT_FALSE(are_isomorphic(gen::path(4), gen::star(3)));
  // Same degree sequence, different graphs.
  const Graph a = parse_graph("0 1\n1 2\n2 3\n3 4\n1 5\n");
  const Graph b = parse_graph("0 1\n1 2\n2 3\n3 4\n2 5\n");
  EXPECT_FALSE(are_isomorphic(a, b));
  EXPECT_FALSE(oracle::isomorphic(a, b));
  EXPECT_THROW(canonical_form(gen::path(65)), SizeError);
}

TEST(Catalog, RawCountsBySubsetArithmetic) {
  const auto raw = build_catalog(false);
  EXPECT_FALSE(raw.deduplicated);
  ASSERT_EQ(raw.members.size(), 68u);
  std::map<std::string, int> per;
  for (const auto& m : raw.members) ++per[m.family_tag];
  EXPECT_EQ(per["C6_1"], 4);
  EXPECT_EQ(per["C7_1"], 16);
  EXPECT_EQ(per["C8_1"], 16);
  EXPECT_EQ(per["C8_2"], 16);
  EXPECT_EQ(per["C9_1"], 16);
}

TEST(Catalog, MembersAreTheChordedCycles) {
  const auto raw = build_catalog(false);
  for (const auto& m : raw.members) {
    const auto& fam = *std::find_if(chord_families().begin(), chord_families().end(),
                                    [&](const FamilySpec& f) { return f.tag == m.family_tag; });
    EXPECT_EQ(m.graph, chorded_cycle(fam.cycle_length, m.chords));
  }
}

TEST(Catalog, DedupCountMatchesPermutationOracle) {
  const auto raw = build_catalog(false);
  std::vector<const FMember*> reps;
  std::map<std::string, int> per;
  for (const auto& m : raw.members) {
    bool dup = false;
    for (const auto* r : reps)
      if (oracle::isomorphic(r->graph, m.graph)) {
        dup = true;
        break;
      }
    if (!dup) {
      reps.push_back(&m);
      ++per[m.family_tag];
    }
  }
  EXPECT_EQ(reps.size(), 40u);
  const auto& cat = default_catalog();
  ASSERT_EQ(cat.members.size(), reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    EXPECT_EQ(cat.members[i].family_tag, reps[i]->family_tag);
    EXPECT_EQ(cat.members[i].chords, reps[i]->chords);
  }
  EXPECT_EQ(per["C6_1"], 3);
  EXPECT_EQ(per["C7_1"], 10);
  EXPECT_EQ(per["C8_1"], 9);
  EXPECT_EQ(per["C8_2"], 8);
  EXPECT_EQ(per["C9_1"], 10);
}

TEST(FMembership, SpecExamples) {
  const auto c6 = in_family_F(gen::cycle(6));
  EXPECT_TRUE(c6.member);
  EXPECT_EQ(c6.subset, (std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
  EXPECT_TRUE(default_catalog().members[c6.member_index].chords.empty());
  EXPECT_FALSE(in_family_F(gen::cycle(5)).member);
  EXPECT_FALSE(in_family_F(gen::complete(6)).member);
  EXPECT_TRUE(in_family_F(chorded_cycle(9, {{2, 6}})).member);
}

TEST(FMembership, LongCyclesAndTrees) {
  for (std::size_t n = 6; n <= 9; ++n) EXPECT_TRUE(in_family_F(gen::cycle(n)).member) << n;
  for (std::size_t n = 10; n <= 13; ++n) EXPECT_FALSE(in_family_F(gen::cycle(n)).member) << n;
  EXPECT_FALSE(in_family_F(gen::path(10)).member);
  EXPECT_FALSE(in_family_F(gen::star(8)).member);
}

TEST(FMembership, MatchesSubsetEnumeration) {
  Rng rng(31);
  int members = 0, non_members = 0;
  std::vector<Graph> hosts;
  for (int trial = 0; trial < 60; ++trial) hosts.push_back(random_connected(rng.between(6, 10), rng.between(0, 4), rng));
  for (const auto& m : build_catalog(false).members) {
    std::vector<Edge> e = m.graph.edges();
    const auto n = Vertex(m.graph.vertex_count());
    e.emplace_back(Vertex(rng.below(n)), n);
    hosts.push_back(Graph::make(n + 1, std::move(e)));
  }
  for (const auto& g : hosts) {
    const auto brute = brute_matches(g);
    const auto got = in_family_F(g);
    ASSERT_EQ(got.member, !brute.empty()) << g.to_edge_list();
    if (!got.member) {
      ++non_members;
      continue;
    }
    ++members;
    EXPECT_EQ(got.member_index, brute.begin()->first);
    EXPECT_EQ(got.subset, brute.begin()->second.front());
    EXPECT_TRUE(are_isomorphic(induced_subgraph(g, got.subset), default_catalog().members[got.member_index].graph));
  }
  EXPECT_GE(members, 68);
  EXPECT_GT(non_members, 10);
}

// Adding vertices can only create induced copies, never destroy them.
TEST(FMembership, MonotoneUnderVertexAddition) {
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_connected(rng.between(6, 9), rng.between(0, 3), rng);
    std::vector<Edge> e = g.edges();
    const auto n = Vertex(g.vertex_count());
    e.emplace_back(Vertex(rng.below(n)), n);
    e.emplace_back(Vertex(rng.below(n)), n);
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    const Graph bigger = Graph::make(n + 1, std::move(e));
    if (in_family_F(g).member) EXPECT_TRUE(in_family_F(bigger).member);
  }
}

TEST(Matcher, FindsConstrainedEmbeddings) {
  const Graph c8 = gen::cycle(8);
  InducedMatcher m(gen::path(3), c8);
  const auto any = m.find();
  ASSERT_TRUE(any.has_value());
  std::vector<char> forbidden(8, 0);
  forbidden[0] = forbidden[4] = 1;
  std::vector<char> required(8, 0);
  required[2] = 1;
  const auto hit = m.find(forbidden, required);
  ASSERT_TRUE(hit.has_value());
  EXPECT_NE(std::find(hit->begin(), hit->end(), 2u), hit->end());
  for (Vertex v : *hit) EXPECT_FALSE(forbidden[v]);
  EXPECT_EQ(m.min_subset(), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_FALSE(InducedMatcher(gen::cycle(4), c8).find().has_value());
}
