#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace lexhyp {

/// Exact non-negative length measured in quarter edge-lengths.
///
/// Every distance between points of the quarter grid, and every hyperbolicity
/// constant, is an integer number of quarters, so no floating point is needed.
class QDist {
 public:
  constexpr QDist() = default;
  constexpr explicit QDist(std::int64_t quarters) : quarters_(quarters) {
    if (quarters < 0) throw std::invalid_argument("QDist must be non-negative");
  }

  static constexpr QDist from_quarters(std::int64_t q) { return QDist(q); }
  static constexpr QDist from_units(std::int64_t edges) { return QDist(4 * edges); }
  static constexpr QDist from_halves(std::int64_t halves) { return QDist(2 * halves); }

  /// Converts a hop count on the k-fold subdivision to quarters.
  /// Throws std::domain_error when the length is not a multiple of 1/4.
  static QDist from_hops(std::int64_t hops, int k) {
    const std::int64_t scaled = hops * 4;
    if (scaled % k != 0) {
      throw std::domain_error(std::to_string(hops) + "/" + std::to_string(k) +
                              " is not a multiple of 1/4");
    }
    return QDist(scaled / k);
  }

  constexpr std::int64_t quarters() const noexcept { return quarters_; }

  constexpr bool is_integer() const noexcept { return quarters_ % 4 == 0; }
  constexpr bool is_half_integer() const noexcept { return quarters_ % 2 == 0; }

  /// Lowest-terms fraction: "0", "1", "3/2", "5/4".
  std::string to_string() const {
    const std::int64_t g = std::gcd(quarters_, std::int64_t{4});
    const std::int64_t num = quarters_ / (quarters_ == 0 ? 4 : g);
    const std::int64_t den = quarters_ == 0 ? 1 : 4 / g;
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  constexpr auto operator<=>(const QDist&) const = default;

  constexpr QDist operator+(QDist o) const { return QDist(quarters_ + o.quarters_); }
  constexpr QDist operator-(QDist o) const { return QDist(quarters_ - o.quarters_); }

 private:
  std::int64_t quarters_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, QDist d) { return os << d.to_string(); }

namespace qd {
inline constexpr QDist zero{0};
inline constexpr QDist one{4};
inline constexpr QDist five_quarters{5};
inline constexpr QDist three_halves{6};
}  // namespace qd

}  // namespace lexhyp
