#pragma once

/**
 * @file slope.hpp
 * @brief Exact slopes p/q in lowest terms, Farey adjacency, mediants, and the
 *        parity tri-coloring of the regions complementary to the dual tree.
 *
 * Slopes label the complementary regions of the trivalent tree dual to the
 * Farey triangulation.  Two slopes p/q and r/s span an edge of the
 * triangulation iff |ps - qr| = 1.  All arithmetic is exact: components are
 * 64-bit, cross products are evaluated in 128-bit, and additive operations
 * throw slope_overflow_error instead of wrapping.
 */

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace markoff {

/// Raised when exact slope arithmetic would leave the 64-bit range.
struct slope_overflow_error : std::overflow_error {
  using std::overflow_error::overflow_error;
};

/// A slope p/q in lowest terms with q >= 0.  Infinity is (1, 0).
struct Slope {
  std::int64_t p = 1;  // numerator (carries sign)
  std::int64_t q = 0;  // denominator (non-negative; 0 only for infinity)

  [[nodiscard]] bool infinite() const noexcept { return q == 0; }

  friend bool operator==(const Slope&, const Slope&) noexcept = default;
};

/// Reduces (p, q) to canonical form.  Throws std::invalid_argument on (0, 0).
Slope make_slope(std::int64_t p, std::int64_t q);

inline Slope infinity_slope() noexcept { return Slope{1, 0}; }

/// Extended rational order; every finite slope precedes infinity.
std::strong_ordering slope_order(const Slope& a, const Slope& b) noexcept;

inline bool operator<(const Slope& a, const Slope& b) noexcept {
  return slope_order(a, b) == std::strong_ordering::less;
}

/// True iff |ps - qr| = 1.
bool is_farey_neighbor(const Slope& a, const Slope& b) noexcept;

/// (p+r)/(q+s).  Requires a, b to be Farey neighbors; the result neighbors
/// both and completes a triangle with them.
Slope mediant(const Slope& a, const Slope& b);

/// The two slopes adjacent to both a and b: the mediant and the normalized
/// difference (p-r)/(q-s).  Requires a, b to be Farey neighbors.  Result is
/// ordered by slope_order.
std::array<Slope, 2> common_neighbors(const Slope& a, const Slope& b);

/// Parity class of (p mod 2, q mod 2): (1,0) -> 1, (0,1) -> 2, (1,1) -> 3.
/// Adjacent regions always carry distinct colors, and the two regions
/// opposite an edge carry equal colors.
int color(const Slope& s) noexcept;

/// "inf" for infinity, "p" for integers, "p/q" otherwise.
std::string to_string(const Slope& s);

/// Inverse of to_string; also accepts "p/1" style input.
/// Throws std::invalid_argument on malformed text.
Slope parse_slope(const std::string& text);

}  // namespace markoff
