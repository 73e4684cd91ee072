#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "lexhyp/error.hpp"
#include "lexhyp/geodesics.hpp"
#include "lexhyp/graph.hpp"
#include "lexhyp/parallel.hpp"
#include "lexhyp/qdist.hpp"
#include "lexhyp/subdivision.hpp"

namespace lexhyp {

struct DeltaConfig {
  std::size_t geodesic_cap = kDefaultGeodesicCap;
  bool cycle_only = true;
  int grid_factor = 4;  // 4 or 8
  bool parallel = false;
  std::size_t grid_cap = kDefaultGridCap;
  /// When set, only corner triples whose pairwise distances are all at most
  /// this length are considered.
  std::optional<QDist> max_side_length;
  /// When set, the thin point p must be a vertex of the base graph. The
  /// reported value is then the restricted maximum.
  bool thin_points_at_vertices = false;
};

/// Three J-corners on a grid and one geodesic per side: [xy], [yz], [zx].
struct GeodesicTriangle {
  std::array<Vertex, 3> corners{};
  std::array<Path, 3> sides;
  bool is_cycle = false;
};

/// Thinness of a triangle, in grid hops, with the point that attains it.
struct Thinness {
  std::uint32_t hops = 0;
  int k = 4;
  int side = 0;
  Vertex point = 0;

  QDist value() const { return QDist::from_hops(hops, k); }
};

struct DeltaStats {
  std::uint64_t triples_examined = 0;
  std::uint64_t geodesics_enumerated = 0;
  std::uint64_t points_swept = 0;
  double millis = 0;
};

struct DeltaResult {
  QDist value;
  std::uint32_t hops = 0;
  int grid_factor = 4;
  std::optional<GeodesicTriangle> witness;
  std::optional<Vertex> witness_point;
  int witness_side = 0;
  DeltaStats stats;
};

/// True when the sides meet pairwise only at their shared corner.
inline bool is_cycle_triangle(const GeodesicTriangle& t, std::size_t grid_size) {
  std::vector<std::uint8_t> owner(grid_size, 0);
  for (int s = 0; s < 3; ++s)
    for (Vertex v : t.sides[s]) owner[v] |= static_cast<std::uint8_t>(1u << s);
  const auto [x, y, z] = t.corners;
  for (Vertex v = 0; v < grid_size; ++v) {
    const auto o = owner[v];
    if (o == 0 || o == 1 || o == 2 || o == 4) continue;
    if (o == 0b011 && v == y) continue;  // [xy] & [yz]
    if (o == 0b110 && v == z) continue;  // [yz] & [zx]
    if (o == 0b101 && v == x) continue;  // [zx] & [xy]
    return false;
  }
  return true;
}

/// Validates a triangle against a grid: corners in J, each side a geodesic
/// between the right corners. Throws ValidationError otherwise.
inline void validate_triangle(const SubdividedGraph& s, const GeodesicTriangle& t) {
  for (Vertex c : t.corners) {
    if (c >= s.size() || !s.in_j(c)) throw ValidationError("triangle corner is not a J-point of the grid");
  }
  const std::array<std::pair<Vertex, Vertex>, 3> ends{{{t.corners[0], t.corners[1]},
                                                       {t.corners[1], t.corners[2]},
                                                       {t.corners[2], t.corners[0]}}};
  for (int i = 0; i < 3; ++i) {
    const auto& side = t.sides[i];
    if (side.empty() || side.front() != ends[i].first || side.back() != ends[i].second) {
      throw ValidationError("triangle side " + std::to_string(i) + " does not join its corners");
    }
    for (std::size_t j = 0; j + 1 < side.size(); ++j) {
      auto nb = s.neighbors(side[j]);
      if (!std::binary_search(nb.begin(), nb.end(), side[j + 1])) {
        throw ValidationError("triangle side " + std::to_string(i) + " is not a grid path");
      }
    }
    if (s.bfs(ends[i].first)[ends[i].second] + 1 != side.size()) {
      throw ValidationError("triangle side " + std::to_string(i) + " is not a geodesic");
    }
  }
}

/// Max over sides i and grid points p on side i of the distance from p to
/// the union of the other two sides, by one multi-source BFS per side.
inline Thinness thinness(const SubdividedGraph& s, const GeodesicTriangle& t) {
  Thinness best{0, s.k(), 0, t.corners[0]};
  for (int i = 0; i < 3; ++i) {
    std::vector<Vertex> others(t.sides[(i + 1) % 3]);
    others.insert(others.end(), t.sides[(i + 2) % 3].begin(), t.sides[(i + 2) % 3].end());
    const auto dist = s.bfs_from_set(others);
    for (Vertex p : t.sides[i]) {
      if (dist[p] > best.hops) best = {dist[p], s.k(), i, p};
    }
  }
  return best;
}

namespace detail {

/// Shared state for the triangle sweep on one grid.
class DeltaEngine {
 public:
  using Hop = GraphMetrics::Hop;

  DeltaEngine(const SubdividedGraph& s, const DeltaConfig& cfg)
      : s_(s), cfg_(cfg), m_(all_pairs_distances(s, cfg.parallel)), js_(s.j_set()) {
    if (s.size() >= (1u << 15)) throw SizeError("grid too large for the triangle sweep");
    if (cfg.max_side_length) {
      side_limit_ = static_cast<std::uint32_t>(cfg.max_side_length->quarters() * s.k() / 4);
    }
    // Vertices of the grid sorted by distance from each J source.
    order_.resize(js_.size());
    for (std::size_t i = 0; i < js_.size(); ++i) {
      auto row = m_.row(js_[i]);
      auto& ord = order_[i];
      ord.resize(s.size());
      for (Vertex v = 0; v < s.size(); ++v) ord[v] = v;
      std::stable_sort(ord.begin(), ord.end(), [&](Vertex a, Vertex b) { return row[a] < row[b]; });
    }
  }

  const GraphMetrics& metrics() const { return m_; }
  const SubdividedGraph& grid() const { return s_; }

  /// One candidate: corners (sorted grid ids), the side containing p, and p.
  /// Packed so that integer order is lexicographic in (x, y, z, side, p).
  static std::uint64_t pack(Vertex x, Vertex y, Vertex z, unsigned side, Vertex p) {
    return (std::uint64_t{x} << 47) | (std::uint64_t{y} << 32) | (std::uint64_t{z} << 17) |
           (std::uint64_t{side} << 15) | p;
  }
  static std::array<Vertex, 3> corners_of(std::uint64_t key) {
    return {static_cast<Vertex>(key >> 47), static_cast<Vertex>((key >> 32) & 0x7fff),
            static_cast<Vertex>((key >> 17) & 0x7fff)};
  }
  static unsigned side_of(std::uint64_t key) { return static_cast<unsigned>((key >> 15) & 3); }
  static Vertex point_of(std::uint64_t key) { return static_cast<Vertex>(key & 0x7fff); }

  /// Scratch buffers for one point p.
  struct Scratch {
    std::vector<Hop> w;                 // DP over the grid
    std::vector<std::vector<Hop>> f;    // f[ix][iz]: best bottleneck from J[ix] to J[iz]
    std::vector<char> have;             // f[ix] computed for the current p
  };

  Scratch make_scratch() const {
    Scratch sc;
    sc.w.resize(s_.size());
    sc.f.resize(js_.size());
    sc.have.assign(js_.size(), 0);
    return sc;
  }

  /// For point p and J source ix: f[ix][iz] = max over geodesics from J[ix]
  /// to J[iz] of the minimum distance from p to a vertex of the geodesic.
  void bottleneck_row(Scratch& sc, Vertex p, std::size_t ix) const {
    if (sc.have[ix]) return;
    const auto dp = m_.row(p);
    const Vertex x = js_[ix];
    const auto dx = m_.row(x);
    auto& w = sc.w;
    const auto& ord = order_[ix];
    w[x] = dp[x];
    for (std::size_t i = 1; i < ord.size(); ++i) {
      const Vertex q = ord[i];
      const Hop level = dx[q];
      Hop best = 0;
      for (Vertex r : s_.neighbors(q)) {
        if (dx[r] + 1 == level && w[r] > best) best = w[r];
      }
      w[q] = std::min(dp[q], best);
    }
    auto& row = sc.f[ix];
    row.resize(js_.size());
    for (std::size_t iz = 0; iz < js_.size(); ++iz) row[iz] = w[js_[iz]];
    sc.have[ix] = 1;
  }

  bool pair_allowed(Vertex a, Vertex b) const { return !side_limit_ || m_.hops(a, b) <= *side_limit_; }

  /// Visits every (pair on a side through p, third corner) whose value
  /// min(f[x][z], f[y][z]) is at least `threshold()`; the threshold callback
  /// is re-read so callers can raise it while sweeping.
  template <typename ThresholdFn, typename Visit>
  void sweep_point(Scratch& sc, Vertex p, ThresholdFn&& threshold, Visit&& visit) const {
    if (cfg_.thin_points_at_vertices && !s_.is_base_vertex(p)) return;
    std::fill(sc.have.begin(), sc.have.end(), 0);
    const auto dp = m_.row(p);
    const std::size_t nj = js_.size();
    for (std::size_t ix = 0; ix < nj; ++ix) {
      const Vertex x = js_[ix];
      for (std::size_t iy = ix + 1; iy < nj; ++iy) {
        const Vertex y = js_[iy];
        const std::uint32_t t = threshold();
        if (std::min(dp[x], dp[y]) < t) continue;
        if (dp[x] + dp[y] != m_.hops(x, y)) continue;
        if (!pair_allowed(x, y)) continue;
        bottleneck_row(sc, p, ix);
        bottleneck_row(sc, p, iy);
        const auto& fx = sc.f[ix];
        const auto& fy = sc.f[iy];
        for (std::size_t iz = 0; iz < nj; ++iz) {
          if (iz == ix || iz == iy) continue;
          const Hop v = std::min(fx[iz], fy[iz]);
          if (v < threshold()) continue;
          const Vertex z = js_[iz];
          if (!pair_allowed(x, z) || !pair_allowed(y, z)) continue;
          visit(x, y, z, ix, iy, iz, v);
        }
      }
    }
  }

  /// Largest value over all triangles with J corners (no cycle restriction).
  std::uint32_t max_value(DeltaStats& stats) const {
    std::atomic<std::uint32_t> best{0};
    std::atomic<std::uint64_t> swept{0};
    const std::size_t n = s_.size();
    std::mutex m;
    std::vector<Scratch> pool;
    parallel_for(n, cfg_.parallel, [&](std::size_t pi) {
      Scratch sc;
      {
        std::lock_guard lock(m);
        if (pool.empty()) {
          sc = make_scratch();
        } else {
          sc = std::move(pool.back());
          pool.pop_back();
        }
      }
      ++swept;
      sweep_point(
          sc, static_cast<Vertex>(pi), [&] { return best.load() + 1; },
          [&](Vertex, Vertex, Vertex, std::size_t, std::size_t, std::size_t, Hop v) {
            std::uint32_t cur = best.load();
            while (v > cur && !best.compare_exchange_weak(cur, v)) {
            }
          });
      std::lock_guard lock(m);
      pool.push_back(std::move(sc));
    });
    stats.points_swept += swept.load();
    return best.load();
  }

  /// Smallest candidate key reaching `t`, or nullopt when there is none.
  std::optional<std::uint64_t> min_candidate(std::uint32_t t, DeltaStats& stats) const {
    const std::size_t n = s_.size();
    std::vector<std::uint64_t> per_point(n, kNoKey);
    parallel_for(n, cfg_.parallel, [&](std::size_t pi) {
      Scratch sc = make_scratch();
      const auto p = static_cast<Vertex>(pi);
      auto& best = per_point[pi];
      sweep_point(sc, p, [t] { return t; },
                  [&](Vertex x, Vertex y, Vertex z, std::size_t ix, std::size_t iy, std::size_t iz, Hop) {
                    best = std::min(best, candidate_key(x, y, z, ix, iy, iz, p));
                  });
    });
    stats.points_swept += n;
    const auto it = std::min_element(per_point.begin(), per_point.end());
    if (it == per_point.end() || *it == kNoKey) return std::nullopt;
    return *it;
  }

  /// Set of sorted J-index triples (a < b < c) having some candidate reaching `t`.
  class TripleSet {
   public:
    explicit TripleSet(std::size_t nj) : nj_(nj), bits_((nj * nj * nj + 63) / 64, 0) {}
    std::size_t index(std::size_t a, std::size_t b, std::size_t c) const { return (a * nj_ + b) * nj_ + c; }
    void set(std::size_t i) { bits_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void merge(const TripleSet& o) {
      for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    }
    /// Calls fn(a, b, c) in lexicographic order until it returns true.
    template <typename Fn>
    bool find_first(Fn&& fn) const {
      for (std::size_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t word = bits_[w];
        while (word) {
          const int bit = std::countr_zero(word);
          word &= word - 1;
          const std::size_t i = w * 64 + static_cast<std::size_t>(bit);
          if (fn(i / (nj_ * nj_), (i / nj_) % nj_, i % nj_)) return true;
        }
      }
      return false;
    }
    std::size_t count() const {
      std::size_t c = 0;
      for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
      return c;
    }

   private:
    std::size_t nj_;
    std::vector<std::uint64_t> bits_;
  };

  static constexpr std::size_t kMaxTripleBits = std::size_t{1} << 31;

  /// Every corner triple with some candidate reaching `t`.
  TripleSet candidate_triples(std::uint32_t t, DeltaStats& stats) const {
    const std::size_t nj = js_.size();
    if (nj * nj * nj > kMaxTripleBits) throw SizeError("too many J-points for the cycle-restricted sweep");
    TripleSet set(nj);
    const std::size_t n = s_.size();
    Scratch sc = make_scratch();
    for (Vertex p = 0; p < n; ++p) {
      sweep_point(sc, p, [t] { return t; },
                  [&](Vertex, Vertex, Vertex, std::size_t ix, std::size_t iy, std::size_t iz, Hop) {
                    if (iz > iy) {
                      set.set(set.index(ix, iy, iz));
                    } else if (iz > ix) {
                      set.set(set.index(ix, iz, iy));
                    } else {
                      set.set(set.index(iz, ix, iy));
                    }
                  });
    }
    stats.points_swept += n;
    return set;
  }

  static constexpr std::uint64_t kNoKey = ~std::uint64_t{0};

  static std::uint64_t candidate_key(Vertex x, Vertex y, Vertex z, std::size_t ix, std::size_t iy,
                                     std::size_t iz, Vertex p) {
    if (iz > iy) return pack(x, y, z, 0, p);
    if (iz > ix) return pack(x, z, y, 2, p);
    return pack(z, x, y, 1, p);
  }

  const std::vector<Vertex>& j_points() const { return js_; }

  /// Largest bigon value: max over J pairs x, y and p on a geodesic [xy] of
  /// the best distance from p to another geodesic [xy].
  std::uint32_t bigon_value(DeltaStats& stats) const {
    std::uint32_t best = 0;
    Scratch sc = make_scratch();
    const std::size_t nj = js_.size();
    for (Vertex p = 0; p < s_.size(); ++p) {
      ++stats.points_swept;
      std::fill(sc.have.begin(), sc.have.end(), 0);
      const auto dp = m_.row(p);
      for (std::size_t ix = 0; ix < nj; ++ix) {
        const Vertex x = js_[ix];
        for (std::size_t iy = ix + 1; iy < nj; ++iy) {
          const Vertex y = js_[iy];
          if (std::min(dp[x], dp[y]) <= best) continue;
          if (dp[x] + dp[y] != m_.hops(x, y)) continue;
          bottleneck_row(sc, p, ix);
          best = std::max<std::uint32_t>(best, sc.f[ix][iy]);
        }
      }
    }
    return best;
  }

  /// Lexicographically smallest geodesic from a to b.
  Path first_geodesic(Vertex a, Vertex b) const {
    Path path{a};
    const auto db = m_.row(b);
    while (path.back() != b) {
      const Vertex q = path.back();
      for (Vertex r : s_.neighbors(q)) {
        if (db[r] + 1 == db[q]) {
          path.push_back(r);
          break;
        }
      }
    }
    return path;
  }

  /// A geodesic from a to b all of whose vertices are at least t from p,
  /// choosing the smallest admissible vertex at each step.
  Path bottleneck_geodesic(Vertex p, Vertex a, Vertex b, std::uint32_t t) const {
    // Admissible vertices: on some a-b geodesic through admissible vertices only.
    const auto dp = m_.row(p);
    const auto da = m_.row(a);
    const auto db = m_.row(b);
    std::vector<char> reach(s_.size(), 0);  // admissible path from a
    const std::size_t ia = static_cast<std::size_t>(std::lower_bound(js_.begin(), js_.end(), a) - js_.begin());
    const auto& ord = order_[ia];
    for (Vertex q : ord) {
      if (dp[q] < t || da[q] + db[q] != da[b]) continue;
      if (q == a) {
        reach[q] = 1;
        continue;
      }
      for (Vertex r : s_.neighbors(q)) {
        if (reach[r] && da[r] + 1 == da[q]) {
          reach[q] = 1;
          break;
        }
      }
    }
    // Walk back from b, then reverse.
    Path rev{b};
    while (rev.back() != a) {
      const Vertex q = rev.back();
      for (Vertex r : s_.neighbors(q)) {
        if (reach[r] && da[r] + 1 == da[q]) {
          rev.push_back(r);
          break;
        }
      }
    }
    return Path(rev.rbegin(), rev.rend());
  }

  /// Thinness through the all-pairs matrix (row minima), first maximiser in
  /// (side, position) order.
  Thinness thinness_apsp(const GeodesicTriangle& t) const {
    Thinness best{0, s_.k(), 0, t.corners[0]};
    for (int i = 0; i < 3; ++i) {
      const auto& a = t.sides[(i + 1) % 3];
      const auto& b = t.sides[(i + 2) % 3];
      for (Vertex p : t.sides[i]) {
        const auto dp = m_.row(p);
        std::uint32_t d = kUnreachable;
        for (Vertex q : a) d = std::min<std::uint32_t>(d, dp[q]);
        for (Vertex q : b) d = std::min<std::uint32_t>(d, dp[q]);
        if (d > best.hops) best = {d, s_.k(), i, p};
      }
    }
    return best;
  }

  /// True when some point of the triangle is at least t from the other sides.
  bool reaches(const std::array<const Path*, 3>& sides, std::uint32_t t) const {
    for (int i = 0; i < 3; ++i) {
      const auto& a = *sides[(i + 1) % 3];
      const auto& b = *sides[(i + 2) % 3];
      const auto& me = *sides[i];
      for (std::size_t k = 1; k + 1 < me.size(); ++k) {
        if (cfg_.thin_points_at_vertices && !s_.is_base_vertex(me[k])) continue;
        const auto dp = m_.row(me[k]);
        if (dp[me.front()] < t || dp[me.back()] < t) continue;
        bool ok = true;
        for (Vertex q : a) {
          if (dp[q] < t) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        for (Vertex q : b) {
          if (dp[q] < t) {
            ok = false;
            break;
          }
        }
        if (ok) return true;
      }
    }
    return false;
  }

  const std::vector<Path>& geodesics(Vertex a, Vertex b, DeltaStats& stats) {
    const std::uint64_t key = (std::uint64_t{a} << 32) | b;
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    if (cache_.size() > 200000) cache_.clear();
    auto paths = enumerate_geodesics(s_, m_, a, b, cfg_.geodesic_cap);
    stats.geodesics_enumerated += paths.size();
    return cache_.emplace(key, std::move(paths)).first->second;
  }

  /// First cycle triangle on corners (x, y, z), in lexicographic order of
  /// side choices, whose thinness reaches t.
  std::optional<GeodesicTriangle> cycle_triangle_reaching(Vertex x, Vertex y, Vertex z, std::uint32_t t,
                                                          DeltaStats& stats) {
    // Copies: the cache may be cleared by a later lookup.
    const std::vector<Path> s1 = geodesics(x, y, stats);
    const std::vector<Path> s2 = geodesics(y, z, stats);
    const std::vector<Path> s3 = geodesics(z, x, stats);
    if (stamp_.size() != s_.size()) stamp_.assign(s_.size(), 0);
    for (const auto& a : s1) {
      for (Vertex v : a) stamp_[v] |= 1;
      for (const auto& b : s2) {
        bool ok = true;
        for (std::size_t i = 1; i < b.size() && ok; ++i) ok = !(stamp_[b[i]] & 1);
        if (!ok) continue;
        for (Vertex v : b) stamp_[v] |= 2;
        for (const auto& c : s3) {
          bool disjoint = true;
          for (std::size_t i = 1; i + 1 < c.size() && disjoint; ++i) disjoint = stamp_[c[i]] == 0;
          if (!disjoint) continue;
          if (reaches({&a, &b, &c}, t)) {
            for (Vertex v : b) stamp_[v] &= static_cast<std::uint8_t>(~2u);
            for (Vertex v : a) stamp_[v] &= static_cast<std::uint8_t>(~1u);
            return GeodesicTriangle{{x, y, z}, {a, b, c}, true};
          }
        }
        for (Vertex v : b) stamp_[v] &= static_cast<std::uint8_t>(~2u);
      }
      for (Vertex v : a) stamp_[v] &= static_cast<std::uint8_t>(~1u);
    }
    return std::nullopt;
  }

 private:
  const SubdividedGraph& s_;
  DeltaConfig cfg_;
  GraphMetrics m_;
  std::vector<Vertex> js_;
  std::vector<std::vector<Vertex>> order_;
  std::optional<std::uint32_t> side_limit_;
  std::unordered_map<std::uint64_t, std::vector<Path>> cache_;
  std::vector<std::uint8_t> stamp_;
};

inline GeodesicTriangle triangle_from_candidate(const DeltaEngine& e, std::uint64_t key, std::uint32_t t) {
  const auto c = DeltaEngine::corners_of(key);
  const unsigned side = DeltaEngine::side_of(key);
  const Vertex p = DeltaEngine::point_of(key);
  const std::array<std::pair<Vertex, Vertex>, 3> ends{{{c[0], c[1]}, {c[1], c[2]}, {c[2], c[0]}}};
  GeodesicTriangle tri{c, {}, false};
  for (unsigned i = 0; i < 3; ++i) {
    auto [a, b] = ends[i];
    if (i == side) {
      Path first = e.first_geodesic(a, p);
      Path second = e.first_geodesic(p, b);
      first.insert(first.end(), second.begin() + 1, second.end());
      tri.sides[i] = std::move(first);
    } else {
      tri.sides[i] = e.bottleneck_geodesic(p, a, b, t);
    }
  }
  tri.is_cycle = is_cycle_triangle(tri, e.grid().size());
  return tri;
}

/// A zero-thinness witness for graphs whose constant is 0: the first three
/// J-points with lexicographically first geodesic sides.
inline std::optional<GeodesicTriangle> trivial_witness(const DeltaEngine& e) {
  const auto& js = e.grid().j_set();
  if (js.size() < 3) return std::nullopt;
  GeodesicTriangle tri{{js[0], js[1], js[2]}, {}, false};
  tri.sides[0] = e.first_geodesic(js[0], js[1]);
  tri.sides[1] = e.first_geodesic(js[1], js[2]);
  tri.sides[2] = e.first_geodesic(js[2], js[0]);
  tri.is_cycle = is_cycle_triangle(tri, e.grid().size());
  return tri;
}

}  // namespace detail

/// Exact hyperbolicity constant of `g`, with a witness triangle.
///
/// Corners range over J(G); sides are grid geodesics on S_k (k = grid_factor);
/// the thin point p ranges over grid vertices. With cycle_only the maximum is
/// taken over triangles whose sides form a simple cycle. Ties resolve to the
/// smallest corner triple (x < y < z), then the first side choice in
/// lexicographic enumeration order, then first side index and position.
inline DeltaResult delta_exact(const Graph& g, const DeltaConfig& cfg = {}) {
  if (cfg.geodesic_cap < 1) throw ValidationError("geodesic cap must be at least 1");
  if (cfg.grid_factor != 4 && cfg.grid_factor != 8) throw ValidationError("grid factor must be 4 or 8");
  const auto start = std::chrono::steady_clock::now();
  const SubdividedGraph s = subdivide(g, cfg.grid_factor, cfg.grid_cap);
  detail::DeltaEngine engine(s, cfg);
  DeltaResult r;
  r.grid_factor = s.k();

  auto finish = [&](std::uint32_t hops, std::optional<GeodesicTriangle> tri) {
    r.hops = hops;
    r.value = QDist::from_hops(hops, s.k());
    if (tri) {
      const auto th = engine.thinness_apsp(*tri);
      r.witness_point = th.point;
      r.witness_side = th.side;
      r.witness = std::move(tri);
    }
    r.stats.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  };

  const std::uint32_t upper = engine.max_value(r.stats);
  if (upper == 0) return finish(0, detail::trivial_witness(engine));

  if (!cfg.cycle_only) {
    const auto key = engine.min_candidate(upper, r.stats);
    r.stats.triples_examined += 1;
    return finish(upper, detail::triangle_from_candidate(engine, *key, upper));
  }

  const auto& js = engine.j_points();
  for (std::uint32_t t = upper; t >= 1; --t) {
    const auto triples = engine.candidate_triples(t, r.stats);
    std::optional<GeodesicTriangle> found;
    try {
      triples.find_first([&](std::size_t a, std::size_t b, std::size_t c) {
        ++r.stats.triples_examined;
        found = engine.cycle_triangle_reaching(js[a], js[b], js[c], t, r.stats);
        return found.has_value();
      });
    } catch (const CapExceeded& ex) {
      // Every unrestricted triangle is a triangle, so `upper` is a valid lower bound.
      throw ex.with_lower_bound(QDist::from_hops(upper, s.k()).quarters());
    }
    if (found) return finish(t, std::move(found));
  }
  return finish(0, detail::trivial_witness(engine));
}

/// Lower bound from degenerate triangles (bigons) with J endpoints.
inline QDist delta_bigon_lower_bound(const Graph& g, const DeltaConfig& cfg = {}) {
  if (cfg.grid_factor != 4 && cfg.grid_factor != 8) throw ValidationError("grid factor must be 4 or 8");
  const SubdividedGraph s = subdivide(g, cfg.grid_factor, cfg.grid_cap);
  detail::DeltaEngine engine(s, cfg);
  DeltaStats stats;
  return QDist::from_hops(engine.bigon_value(stats), s.k());
}

}  // namespace lexhyp
