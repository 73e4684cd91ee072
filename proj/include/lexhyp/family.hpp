#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lexhyp/graph.hpp"
#include "lexhyp/isomorphism.hpp"

namespace lexhyp {

/// A chord between cycle vertices named v1..vn (v_i is vertex i - 1).
using Chord = std::pair<int, int>;

struct FamilySpec {
  std::string tag;
  int cycle_length;
  std::vector<Chord> chords;
};

/// The five chord families: C6(1), C7(1), C8(1), C8(2), C9(1).
inline const std::vector<FamilySpec>& chord_families() {
  static const std::vector<FamilySpec> families{
      {"C6_1", 6, {{2, 6}, {4, 6}}},
      {"C7_1", 7, {{2, 6}, {2, 7}, {4, 6}, {4, 7}}},
      {"C8_1", 8, {{2, 6}, {2, 8}, {4, 6}, {4, 8}}},
      {"C8_2", 8, {{2, 8}, {4, 6}, {4, 7}, {4, 8}}},
      {"C9_1", 9, {{2, 6}, {2, 9}, {4, 6}, {4, 9}}},
  };
  return families;
}

struct FMember {
  Graph graph;
  std::string family_tag;
  std::vector<Chord> chords;
};

struct FCatalog {
  std::vector<FMember> members;
  bool deduplicated = false;
};

inline std::string chord_name(const Chord& c) {
  return "v" + std::to_string(c.first) + "-v" + std::to_string(c.second);
}

/// Every chord subset of every family, smaller subsets first and, within a
/// size, in lexicographic order of chord positions. With `dedup`, a member
/// isomorphic to an earlier one is dropped.
inline FCatalog build_catalog(bool dedup) {
  FCatalog cat;
  cat.deduplicated = dedup;
  std::set<std::string> seen;
  for (const auto& fam : chord_families()) {
    const int c = static_cast<int>(fam.chords.size());
    for (int size = 0; size <= c; ++size) {
      // Choose `size` of the c chords via a selection mask in lexicographic order.
      std::vector<char> pick(static_cast<std::size_t>(c), 0);
      std::fill(pick.begin(), pick.begin() + size, 1);
      do {
        std::vector<Edge> edges = gen::cycle(static_cast<std::size_t>(fam.cycle_length)).edges();
        std::vector<Chord> chosen;
        for (int i = 0; i < c; ++i) {
          if (!pick[static_cast<std::size_t>(i)]) continue;
          const auto& ch = fam.chords[static_cast<std::size_t>(i)];
          chosen.push_back(ch);
          edges.emplace_back(static_cast<Vertex>(ch.first - 1), static_cast<Vertex>(ch.second - 1));
        }
        Graph g = Graph::make(static_cast<std::size_t>(fam.cycle_length), std::move(edges));
        if (dedup && !seen.insert(canonical_form(g)).second) continue;
        cat.members.push_back({std::move(g), fam.tag, std::move(chosen)});
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
  return cat;
}

/// The deduplicated catalog, built once.
inline const FCatalog& default_catalog() {
  static const FCatalog cat = build_catalog(true);
  return cat;
}

struct FMembership {
  bool member = false;
  std::vector<Vertex> subset;  // sorted host vertices inducing the member
  std::size_t member_index = 0;
};

/// Whether some induced subgraph of `g` is isomorphic to a catalog member.
/// The witness is the lowest-index matching member with its lexicographically
/// smallest vertex subset.
inline FMembership in_family_F(const Graph& g, const FCatalog& cat = default_catalog()) {
  for (std::size_t i = 0; i < cat.members.size(); ++i) {
    const Graph& pattern = cat.members[i].graph;
    if (pattern.vertex_count() > g.vertex_count()) continue;
    InducedMatcher matcher(pattern, g);
    if (auto subset = matcher.min_subset()) return {true, std::move(*subset), i};
  }
  return {};
}

}  // namespace lexhyp
