#pragma once

#include <limits>
#include <string>

#include "json.hpp"
#include "lexhyp/delta.hpp"
#include "lexhyp/family.hpp"
#include "lexhyp/graph.hpp"
#include "lexhyp/subdivision.hpp"

namespace lexhyp {

using Json = nlohmann::ordered_json;

/// Human-readable name of a grid vertex: "3" for a base vertex, "3-5@1/2" for
/// the point at that fraction of the way from 3 towards 5.
inline std::string point_label(const SubdividedGraph& s, Vertex v) {
  const auto& o = s.origin(v);
  if (o.is_base_vertex) return std::to_string(o.index);
  const auto [a, b] = s.base().edges()[o.index];
  const QDist along = QDist::from_hops(o.offset, s.k());
  return std::to_string(a) + "-" + std::to_string(b) + "@" + along.to_string();
}

inline Json to_json(QDist d) { return Json{{"quarters", d.quarters()}, {"value", d.to_string()}}; }

inline Json edges_json(const Graph& g) {
  Json out = Json::array();
  for (auto [a, b] : g.edges()) out.push_back({a, b});
  return out;
}

inline Json graph_json(const Graph& g) {
  return Json{{"vertices", g.vertex_count()}, {"edges", edges_json(g)}};
}

/// Stable document for a delta result. Wall time is left out unless asked for,
/// so repeated runs serialise byte-identically.
inline Json to_json(const Graph& g, const DeltaResult& r, bool include_timing = false) {
  Json j;
  j["quarters"] = r.value.quarters();
  j["value"] = r.value.to_string();
  j["grid_factor"] = r.grid_factor;
  if (r.witness) {
    const SubdividedGraph s(g, r.grid_factor, std::numeric_limits<std::size_t>::max());
    const auto& t = *r.witness;
    Json w;
    w["corners"] = Json::array({t.corners[0], t.corners[1], t.corners[2]});
    Json labels = Json::array();
    for (Vertex c : t.corners) labels.push_back(point_label(s, c));
    w["corner_labels"] = labels;
    Json sides = Json::array();
    for (const auto& side : t.sides) sides.push_back(side);
    w["sides"] = sides;
    w["is_cycle"] = t.is_cycle;
    w["point"] = *r.witness_point;
    w["point_label"] = point_label(s, *r.witness_point);
    w["point_side"] = r.witness_side;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  Json stats{{"triples_examined", r.stats.triples_examined},
             {"geodesics_enumerated", r.stats.geodesics_enumerated},
             {"points_swept", r.stats.points_swept}};
  if (include_timing) stats["millis"] = r.stats.millis;
  j["stats"] = stats;
  return j;
}

inline Json to_json(const FMembership& m, const FCatalog& cat = default_catalog()) {
  Json j{{"member", m.member}};
  if (m.member) {
    const auto& mem = cat.members[m.member_index];
    j["member_index"] = m.member_index;
    j["family"] = mem.family_tag;
    j["subset"] = m.subset;
    Json chords = Json::array();
    for (const auto& c : mem.chords) chords.push_back(chord_name(c));
    j["chords"] = chords;
  }
  return j;
}

/// Index document of a catalog export.
inline Json catalog_index(const FCatalog& cat) {
  Json members = Json::array();
  for (std::size_t i = 0; i < cat.members.size(); ++i) {
    const auto& m = cat.members[i];
    Json chords = Json::array();
    for (const auto& c : m.chords) chords.push_back(chord_name(c));
    members.push_back({{"id", i},
                       {"file", "member_" + std::to_string(i) + ".edges"},
                       {"family", m.family_tag},
                       {"vertices", m.graph.vertex_count()},
                       {"chords", chords}});
  }
  return Json{{"deduplicated", cat.deduplicated}, {"count", cat.members.size()}, {"members", members}};
}

}  // namespace lexhyp
