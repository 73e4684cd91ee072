#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lexhyp/error.hpp"
#include "lexhyp/graph.hpp"

namespace lexhyp {

namespace detail {

/// Colour refinement started from degrees. Returns a colour per vertex; colour
/// ids are ranks of refinement signatures, so they are isomorphism-invariant.
inline std::vector<std::uint32_t> refine_colours(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> colour(n);
  for (Vertex v = 0; v < n; ++v) colour[v] = static_cast<std::uint32_t>(g.degree(v));
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<std::uint32_t>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<std::uint32_t> around;
      for (Vertex w : g.neighbors(v)) around.push_back(colour[w]);
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
    std::map<std::vector<std::uint32_t>, std::uint32_t> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    std::uint32_t next = 0;
    for (auto& [s, r] : rank) r = next++;
    for (Vertex v = 0; v < n; ++v) colour[v] = rank[sig[v]];
    if (rank.size() == classes) break;
    classes = rank.size();
  }
  return colour;
}

struct CanonSearch {
  const Graph& g;
  std::vector<std::uint32_t> colour;  // per vertex
  std::vector<std::uint32_t> slot_colour;  // colour required at each position
  std::vector<Vertex> perm;
  std::vector<char> used;
  std::vector<std::uint64_t> best;  // one row per position: bits of adjacency to earlier positions
  std::vector<std::uint64_t> cur;
  bool have_best = false;

  void run(std::size_t pos) {
    const std::size_t n = g.vertex_count();
    if (pos == n) {
      if (!have_best || cur < best) {
        best = cur;
        have_best = true;
      }
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[v] || colour[v] != slot_colour[pos]) continue;
      std::uint64_t row = 0;
      for (std::size_t j = 0; j < pos; ++j)
        if (g.has_edge(v, perm[j])) row |= std::uint64_t{1} << j;
      cur[pos] = row;
      // Prune when the prefix is already worse than the best code.
      if (have_best && !prefix_not_worse(pos)) continue;
      used[v] = 1;
      perm[pos] = v;
      run(pos + 1);
      used[v] = 0;
    }
  }

  bool prefix_not_worse(std::size_t pos) const {
    for (std::size_t i = 0; i <= pos; ++i) {
      if (cur[i] != best[i]) return cur[i] < best[i];
    }
    return true;
  }
};

}  // namespace detail

/// Canonical code of a small graph (at most 64 vertices; intended for <= 12):
/// equal codes iff isomorphic.
inline std::string canonical_form(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 64) throw SizeError("canonical_form supports at most 64 vertices");
  detail::CanonSearch cs{g, detail::refine_colours(g), {}, std::vector<Vertex>(n), std::vector<char>(n, 0),
                         std::vector<std::uint64_t>(n, 0), std::vector<std::uint64_t>(n, 0)};
  cs.slot_colour = cs.colour;
  std::sort(cs.slot_colour.begin(), cs.slot_colour.end());
  cs.run(0);
  std::string code = std::to_string(n) + ":";
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) code += ((cs.best[i] >> j) & 1) ? '1' : '0';
  return code;
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

/// Induced-subgraph matcher of a small connected pattern into a host.
///
/// Pattern vertices are matched rarest-degree-first, then greedily by the
/// number of already-ordered neighbours. Candidates are pruned by degree,
/// by exact adjacency to mapped vertices, and by host distance not exceeding
/// pattern distance.
class InducedMatcher {
 public:
  InducedMatcher(const Graph& pattern, const Graph& host)
      : p_(pattern), h_(host), pd_(pattern.distance_matrix()), hd_(host.distance_matrix()) {
    order_ = search_order(pattern);
  }

  /// Some embedding whose image avoids `forbidden` vertices and covers all
  /// `required` ones (both indexed by host vertex; empty = no constraint).
  std::optional<std::vector<Vertex>> find(const std::vector<char>& forbidden = {},
                                          const std::vector<char>& required = {}) {
    if (p_.vertex_count() > h_.vertex_count()) return std::nullopt;
    forbidden_ = forbidden.empty() ? std::vector<char>(h_.vertex_count(), 0) : forbidden;
    required_ = required.empty() ? std::vector<char>(h_.vertex_count(), 0) : required;
    required_left_ = static_cast<std::size_t>(std::count(required_.begin(), required_.end(), 1));
    map_.assign(p_.vertex_count(), 0);
    used_.assign(h_.vertex_count(), 0);
    if (extend(0)) return map_;
    return std::nullopt;
  }

  /// Lexicographically smallest sorted host vertex set inducing a copy of the pattern.
  std::optional<std::vector<Vertex>> min_subset() {
    if (!find()) return std::nullopt;
    const std::size_t n = h_.vertex_count();
    std::vector<Vertex> chosen;
    std::vector<char> required(n, 0), forbidden(n, 0);
    Vertex lower = 0;
    while (chosen.size() < p_.vertex_count()) {
      bool advanced = false;
      for (Vertex v = lower; v < n; ++v) {
        required[v] = 1;
        if (find(forbidden, required)) {
          chosen.push_back(v);
          lower = v + 1;
          advanced = true;
          break;
        }
        required[v] = 0;
        forbidden[v] = 1;
      }
      if (!advanced) throw std::logic_error("min_subset lost a known embedding");
    }
    return chosen;
  }

  static std::vector<Vertex> search_order(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::map<std::size_t, std::size_t> freq;
    for (Vertex v = 0; v < n; ++v) ++freq[g.degree(v)];
    auto rarer = [&](Vertex a, Vertex b) {
      const auto fa = freq[g.degree(a)], fb = freq[g.degree(b)];
      if (fa != fb) return fa < fb;
      if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
      return a < b;
    };
    std::vector<Vertex> order;
    std::vector<char> placed(n, 0);
    std::vector<std::size_t> links(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::optional<Vertex> pick;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (!pick || links[v] > links[*pick] || (links[v] == links[*pick] && rarer(v, *pick))) pick = v;
      }
      placed[*pick] = 1;
      order.push_back(*pick);
      for (Vertex w : g.neighbors(*pick)) ++links[w];
    }
    return order;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return required_left_ == 0;
    if (required_left_ > order_.size() - depth) return false;
    const Vertex u = order_[depth];
    const std::size_t np = p_.vertex_count();
    const std::size_t nh = h_.vertex_count();
    for (Vertex c = 0; c < nh; ++c) {
      if (used_[c] || forbidden_[c] || h_.degree(c) < p_.degree(u)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Vertex w = order_[k];
        const Vertex hw = map_[w];
        const bool pe = pd_[u * np + w] == 1;
        const bool he = hd_[c * nh + hw] == 1;
        if (pe != he) ok = false;
        else if (pd_[u * np + w] != kUnreachable && hd_[c * nh + hw] > pd_[u * np + w]) ok = false;
      }
      if (!ok) continue;
      used_[c] = 1;
      map_[u] = c;
      if (required_[c]) --required_left_;
      if (extend(depth + 1)) return true;
      if (required_[c]) ++required_left_;
      used_[c] = 0;
    }
    return false;
  }

  Graph p_;
  Graph h_;
  std::vector<std::uint32_t> pd_;
  std::vector<std::uint32_t> hd_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
  std::vector<char> forbidden_;
  std::vector<char> required_;
  std::size_t required_left_ = 0;
};

}  // namespace lexhyp
