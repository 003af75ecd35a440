#pragma once

/**
 * @file farey.hpp
 * @brief Combinatorics of the trivalent tree dual to the Farey triangulation:
 *        triangles (tree vertices), edges with their flanking/opposite
 *        regions, navigation, slope ancestry, and the free-group words
 *        attached to slopes.
 */

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "markoff/slope.hpp"

namespace markoff {

/// A vertex of the dual tree: three pairwise adjacent regions, stored in
/// slope order.  Each triangle has exactly one region of each color.
struct Triangle {
  std::array<Slope, 3> regions;

  friend bool operator==(const Triangle&, const Triangle&) noexcept = default;
};

bool operator<(const Triangle& a, const Triangle& b) noexcept;

/// Validates pairwise adjacency and sorts.  Throws std::domain_error when the
/// slopes do not span a triangle of the triangulation.
Triangle make_triangle(const Slope& a, const Slope& b, const Slope& c);

/// The triangle (0, 1, inf) at which maps are anchored.
Triangle base_triangle();

/// The unique region of t with the given color (1, 2 or 3).
const Slope& region_of_color(const Triangle& t, int color_index);

/// An edge of the dual tree.  flank holds the two regions meeting along the
/// edge; opposite[i] completes flank into the endpoint triangle i.  Both
/// pairs are stored in slope order, and color(opposite[0]) ==
/// color(opposite[1]).
struct TreeEdge {
  std::array<Slope, 2> flank;
  std::array<Slope, 2> opposite;

  friend bool operator==(const TreeEdge&, const TreeEdge&) noexcept = default;
};

/// Builds the edge spanned by two adjacent regions.
TreeEdge make_edge(const Slope& a, const Slope& b);

/// Endpoint triangle holding opposite[which].
Triangle edge_endpoint(const TreeEdge& e, int which);

/// Common color of the two opposite regions.
int edge_color(const TreeEdge& e);

/// One step of tree navigation: crossing `edge` away from a triangle removes
/// its region `removed` and brings in `added`.
struct NeighborStep {
  TreeEdge edge;
  Triangle triangle;  // the neighbor on the far side
  Slope removed;      // region of the source triangle opposite the edge
  Slope added;        // region of the neighbor opposite the edge
};

/// The three neighbors of t, ordered by the removed region's position in t.
std::array<NeighborStep, 3> triangle_neighbors(const Triangle& t);

/// Birth data of a slope s outside the base triangle: {parents[0],
/// parents[1], s} is the triangle through which s is first reached from the
/// base, and `back` is the region that triangle replaced (so color(back) ==
/// color(s)).  Throws std::domain_error for base regions.
struct SlopeAncestry {
  std::array<Slope, 2> parents;
  Slope back;
};

SlopeAncestry slope_ancestry(const Slope& s);

// ---------------------------------------------------------------------------
// Words
// ---------------------------------------------------------------------------

/// Letters of the free group on a, b.  A and B denote inverses.
enum class Letter : unsigned char { a, b, A, B };

Letter inverse(Letter l) noexcept;

/// A word in the free group, as written (no implicit reduction).
struct Word {
  std::vector<Letter> letters;

  friend bool operator==(const Word&, const Word&) noexcept = default;
};

/// The word attached to a slope: W(inf) = a, W(0) = b, W(1) = ab, mediants
/// concatenate, and negative slopes flip b to its inverse.  Words are freely
/// reduced and primitive, with total exponents (p, q) for positive p/q.
Word slope_word(const Slope& s);

bool is_freely_reduced(const Word& w) noexcept;

/// True when the letter sequence is not a proper power of a shorter block.
bool is_primitive_word(const Word& w) noexcept;

/// Total exponents of a and b.
std::pair<std::int64_t, std::int64_t> word_exponents(const Word& w) noexcept;

/// Compact rendering, e.g. "aab" or "aB" (capitals are inverses).
std::string to_string(const Word& w);

}  // namespace markoff
