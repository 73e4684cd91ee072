#pragma once

#include <string>
#include <vector>

#include "lexhyp/delta.hpp"
#include "lexhyp/error.hpp"
#include "lexhyp/family.hpp"
#include "lexhyp/graph.hpp"
#include "lexhyp/qdist.hpp"
#include "lexhyp/subdivision.hpp"

namespace lexhyp {

struct TreeLexInputs {
  QDist diam_g1;
  QDist diam_g2;
  bool g1_trivial = false;
  bool g2_trivial = false;
  std::optional<bool> g2_in_F;  // only evaluated when a row depends on it
};

/// One row of the tree o graph table.
struct TreeLexCase {
  int case_id = 0;  // 1..7
  std::string label;
  TreeLexInputs inputs;
  QDist value;
};

inline const char* tree_lex_label(int case_id) {
  static const char* labels[] = {
      "",
      "G1 = E1",
      "G2 = E1",
      "diam G1 = 1, 1 <= diam G2 <= 2",
      "diam G1 = 1, diam G2 > 2, G2 not in F",
      "diam G1 = 2, G2 not in F",
      "1 <= diam G1 <= 2, G2 in F",
      "diam G1 >= 3",
  };
  return labels[case_id];
}

/// Every row whose condition holds for the inputs. The table is meant to be
/// a partition, so this should always have exactly one element.
inline std::vector<int> tree_lex_rows(const TreeLexInputs& in) {
  std::vector<int> rows;
  const bool nontrivial = !in.g1_trivial && !in.g2_trivial;
  const bool d1_is_1 = in.diam_g1 == qd::one;
  const bool d1_is_2 = in.diam_g1 == QDist::from_units(2);
  const bool inF = in.g2_in_F.value_or(false);
  if (in.g1_trivial) rows.push_back(1);
  if (!in.g1_trivial && in.g2_trivial) rows.push_back(2);
  if (nontrivial && d1_is_1 && in.diam_g2 <= QDist::from_units(2)) rows.push_back(3);
  if (nontrivial && d1_is_1 && in.diam_g2 > QDist::from_units(2) && !inF) rows.push_back(4);
  if (nontrivial && d1_is_2 && !inF) rows.push_back(5);
  if (nontrivial && (d1_is_1 || d1_is_2) && inF) rows.push_back(6);
  if (nontrivial && in.diam_g1 >= QDist::from_units(3)) rows.push_back(7);
  return rows;
}

inline TreeLexInputs tree_lex_inputs(const Graph& g1, const Graph& g2) {
  TreeLexInputs in;
  in.g1_trivial = g1.is_trivial();
  in.g2_trivial = g2.is_trivial();
  in.diam_g1 = diameters(g1).graph;
  in.diam_g2 = diameters(g2).graph;
  const bool small_tree = in.diam_g1 == qd::one || in.diam_g1 == QDist::from_units(2);
  if (!in.g1_trivial && !in.g2_trivial && small_tree) in.g2_in_F = in_family_F(g2).member;
  return in;
}

/// Closed-form constant of G1 o G2 for a tree G1. Row 1 delegates to the
/// exact engine on G2, since E1 o G2 is G2.
inline TreeLexCase tree_lex_delta(const Graph& g1, const Graph& g2, const DeltaConfig& cfg = {}) {
  if (!g1.is_tree()) throw ValidationError("first factor is not a tree");
  TreeLexCase c;
  c.inputs = tree_lex_inputs(g1, g2);
  const auto rows = tree_lex_rows(c.inputs);
  if (rows.empty()) throw std::logic_error("no row of the tree table applies");
  c.case_id = rows.front();
  c.label = tree_lex_label(c.case_id);
  switch (c.case_id) {
    case 1: c.value = delta_exact(g2, cfg).value; break;
    case 2: c.value = qd::zero; break;
    case 3: c.value = qd::one; break;
    case 4:
    case 5: c.value = qd::five_quarters; break;
    default: c.value = qd::three_halves; break;
  }
  return c;
}

struct BoundResult {
  std::string id;
  bool applicable = false;
  bool holds = true;
  std::string detail;
};

struct BoundReport {
  std::vector<BoundResult> results;

  bool ok() const {
    for (const auto& r : results)
      if (r.applicable && !r.holds) return false;
    return true;
  }
  std::vector<const BoundResult*> violations() const {
    std::vector<const BoundResult*> out;
    for (const auto& r : results)
      if (r.applicable && !r.holds) out.push_back(&r);
    return out;
  }
};

/// Sandwich, lower-bound and upper-equality checks for delta(G1 o G2) given
/// independently computed delta(G1 o G2) and delta(G1).
inline BoundReport bound_check(const Graph& g1, const Graph& g2, QDist delta_product, QDist delta_g1) {
  if (g1.is_trivial()) throw ValidationError("bound_check needs a non-trivial first factor");
  const auto d1 = diameters(g1);
  const auto d2 = diameters(g2);
  const bool g2_nontrivial = !g2.is_trivial();
  const QDist upper = delta_g1 + qd::three_halves;
  BoundReport rep;
  auto add = [&](std::string id, bool applicable, bool holds, std::string detail) {
    rep.results.push_back({std::move(id), applicable, !applicable || holds, std::move(detail)});
  };
  const std::string dp = delta_product.to_string();
  add("sandwich_lower", true, delta_g1 <= delta_product, "delta(G1) = " + delta_g1.to_string() + " <= " + dp);
  add("sandwich_upper", true, delta_product <= upper, dp + " <= delta(G1) + 3/2 = " + upper.to_string());
  add("lower_bound_1", g2_nontrivial, delta_product >= qd::one, dp + " >= 1");
  add("lower_bound_5_4_diamV2", g2_nontrivial && d1.vertex == QDist::from_units(2),
      delta_product >= qd::five_quarters, dp + " >= 5/4 with diam V(G1) = 2");
  add("lower_bound_3_2_diamV3", g2_nontrivial && d1.vertex >= QDist::from_units(3),
      delta_product >= qd::three_halves, dp + " >= 3/2 with diam V(G1) = " + d1.vertex.to_string());
  add("lower_bound_5_4_diamG2", d2.graph > QDist::from_units(2), delta_product >= qd::five_quarters,
      dp + " >= 5/4 with diam G2 = " + d2.graph.to_string());
  add("upper_bound_equality", delta_product == upper,
      g1.is_tree() && g2_nontrivial && delta_product == qd::three_halves,
      "attaining delta(G1) + 3/2 requires a tree G1, non-trivial G2 and value 3/2");
  return rep;
}

}  // namespace lexhyp
