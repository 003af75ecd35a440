#pragma once

/**
 * @file markoff_map.hpp
 * @brief Generalized Markoff maps on the regions of the dual tree: vertex
 *        equation, edge moves, memoized region evaluation, arrow
 *        orientation, vertex classification, trace reduction and minimum
 *        search.
 *
 * The value layer is templated on the complex scalar so the same recursion
 * runs in double precision and in the 50-digit mode.  A map instance owns a
 * memo cache and is not internally synchronized: confine an instance to one
 * thread, or give each worker its own copy.
 */

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "markoff/farey.hpp"
#include "markoff/slope.hpp"

namespace markoff {

/// Raised when region values leave the representable range (|value| > 1e300).
struct precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parameters (lambda_1, lambda_2, lambda_3, s) of the vertex equation
///   x1^2 + x2^2 + x3^2 - x1 x2 x3 + l1 x1 + l2 x2 + l3 x3 = s.
/// lambda_i attaches to the color-i regions.
template <class C>
struct basic_mu_params {
  C lambda1{}, lambda2{}, lambda3{}, s{};

  const C& lambda(int color_index) const {
    switch (color_index) {
      case 1: return lambda1;
      case 2: return lambda2;
      default: return lambda3;
    }
  }
};

/// A triple of region values indexed by color.
template <class C>
struct basic_triple {
  C x1{}, x2{}, x3{};

  const C& by_color(int color_index) const {
    switch (color_index) {
      case 1: return x1;
      case 2: return x2;
      default: return x3;
    }
  }
  C& by_color(int color_index) {
    switch (color_index) {
      case 1: return x1;
      case 2: return x2;
      default: return x3;
    }
  }
};

using MuParams = basic_mu_params<std::complex<double>>;
using MarkoffTriple = basic_triple<std::complex<double>>;

/// Left-hand side of the vertex equation minus s; zero on the variety.
template <class C>
C vertex_residual(const basic_triple<C>& t, const basic_mu_params<C>& mu) {
  return t.x1 * t.x1 + t.x2 * t.x2 + t.x3 * t.x3 - t.x1 * t.x2 * t.x3 +
         mu.lambda1 * t.x1 + mu.lambda2 * t.x2 + mu.lambda3 * t.x3 - mu.s;
}

/// Replaces x_i by x_j x_k - x_i - lambda_i.  An involution that preserves
/// the vertex residual.
template <class C>
basic_triple<C> edge_move(const basic_triple<C>& t, int color_index,
                          const basic_mu_params<C>& mu) {
  if (color_index < 1 || color_index > 3)
    throw std::invalid_argument("edge move index must be 1, 2 or 3");
  basic_triple<C> out = t;
  int j = color_index == 1 ? 2 : 1;
  int k = color_index == 3 ? 2 : 3;
  out.by_color(color_index) = t.by_color(j) * t.by_color(k) -
                              t.by_color(color_index) -
                              mu.lambda(color_index);
  return out;
}

/// A Markoff map: the unique extension of a base triple at the triangle
/// (0, 1, inf) to all regions, with phi(inf) = x1, phi(0) = x2, phi(1) = x3.
template <class C>
class basic_markoff_map {
 public:
  basic_markoff_map(basic_mu_params<C> mu, basic_triple<C> base)
      : mu_(std::move(mu)), base_(std::move(base)) {
    cache_.emplace(infinity_slope(), base_.x1);
    cache_.emplace(make_slope(0, 1), base_.x2);
    cache_.emplace(make_slope(1, 1), base_.x3);
  }

  const basic_mu_params<C>& mu() const { return mu_; }
  const basic_triple<C>& base() const { return base_; }

  /// phi at one region, memoized along the slope's ancestry.  Throws
  /// precision_error once values pass 1e300 in modulus.
  const C& region_value(const Slope& s) {
    auto hit = cache_.find(s);
    if (hit != cache_.end()) return hit->second;
    std::vector<Slope> stack{s};
    while (!stack.empty()) {
      const Slope top = stack.back();
      if (cache_.count(top)) {
        stack.pop_back();
        continue;
      }
      SlopeAncestry anc = slope_ancestry(top);
      bool ready = true;
      for (const Slope& dep : {anc.parents[0], anc.parents[1], anc.back})
        if (!cache_.count(dep)) {
          stack.push_back(dep);
          ready = false;
        }
      if (!ready) continue;
      C value = cache_.at(anc.parents[0]) * cache_.at(anc.parents[1]) -
                cache_.at(anc.back) - mu_.lambda(color(top));
      using std::abs;
      if (!(abs(value) <= 1e300))
        throw precision_error("region value exceeds 1e300 at slope " +
                              to_string(top));
      cache_.emplace(top, value);
      stack.pop_back();
    }
    return cache_.at(s);
  }

  /// The vertex triple at a triangle, indexed by color.
  basic_triple<C> triple_at(const Triangle& t) {
    basic_triple<C> out;
    for (const Slope& r : t.regions) out.by_color(color(r)) = region_value(r);
    return out;
  }

  /// Read-only view of everything evaluated so far.
  const std::map<Slope, C>& cached_regions() const { return cache_; }

 private:
  basic_mu_params<C> mu_;
  basic_triple<C> base_;
  std::map<Slope, C> cache_;
};

using MarkoffMap = basic_markoff_map<std::complex<double>>;

/// Sink test at a triple: every edge move is at least as large in modulus as
/// the value it replaces (ties count toward the sink).
template <class C>
bool sink_conditions(const basic_triple<C>& t, const basic_mu_params<C>& mu) {
  using std::abs;
  for (int i = 1; i <= 3; ++i) {
    double zi = static_cast<double>(abs(t.by_color(i)));
    double wi = static_cast<double>(abs(edge_move(t, i, mu).by_color(i)));
    double scale = std::max({1.0, zi, wi});
    if (zi > wi + 1e-12 * scale) return false;  // strictly outgoing arrow
  }
  return true;
}

/// Arrow direction on an edge: toward the endpoint whose opposite region is
/// smaller in modulus; Both within relative 1e-12.
enum class Orientation { TowardFirst, TowardSecond, Both };

Orientation orient_edge(MarkoffMap& map, const TreeEdge& e);

/// Vertex types by the number of strictly outgoing arrows (ties never count
/// as outgoing): 0 = Sink, 1 = Merge, 2 = Fork, 3 = Source.
enum class VertexType { Sink, Merge, Fork, Source };

VertexType classify_vertex(MarkoffMap& map, const Triangle& t);

/// Result of the trace-reduction descent.
struct ReductionOutcome {
  enum class Kind { SinkFound, SmallRegion, DepthExceeded };
  Kind kind = Kind::DepthExceeded;
  Triangle vertex;              // final triangle visited
  MarkoffTriple triple;         // values there
  Slope region;                 // SmallRegion: the witnessing region
  std::complex<double> value;   // SmallRegion: its value
  std::vector<Triangle> trace;  // visited vertices in order
  bool precision_loss = false;  // expansion aborted past 1e300
};

/// Follows outgoing arrows from `start`, greedily stepping to the neighbor
/// with the smallest new region value.  Stops at a sink, as soon as a
/// visited region value has modulus < 2, or when depth_cap is exhausted.
/// Works for any scalar the map is instantiated with; comparisons happen at
/// that scalar's precision and results narrow to double for reporting.
template <class C>
ReductionOutcome basic_trace_reduce(basic_markoff_map<C>& map,
                                    const Triangle& start, int depth_cap) {
  using std::abs;
  auto narrow = [](const C& v) {
    return std::complex<double>(static_cast<double>(v.real()),
                                static_cast<double>(v.imag()));
  };
  auto tied = [](const auto& za, const auto& zb) {
    auto scale = za < zb ? zb : za;
    if (scale < 1) scale = 1;
    auto diff = za < zb ? zb - za : za - zb;
    return diff <= 1e-12 * scale;
  };

  ReductionOutcome out;
  Triangle cur = start;
  out.trace.push_back(cur);
  for (int depth = 0; depth <= depth_cap; ++depth) {
    out.vertex = cur;
    basic_triple<C> here = map.triple_at(cur);
    out.triple = MarkoffTriple{narrow(here.x1), narrow(here.x2),
                               narrow(here.x3)};

    // A region below modulus 2 ends the descent immediately.
    bool small_found = false;
    for (const Slope& r : cur.regions) {
      const C& v = map.region_value(r);
      if (abs(v) < 2.0 &&
          (!small_found || abs(v) < std::abs(out.value))) {
        out.kind = ReductionOutcome::Kind::SmallRegion;
        out.region = r;
        out.value = narrow(v);
        small_found = true;
      }
    }
    if (small_found) return out;

    const NeighborStep* best_step = nullptr;
    auto steps = triangle_neighbors(cur);
    auto best_mod = abs(map.region_value(cur.regions[0]));  // placeholder
    bool overflow = false;
    for (const NeighborStep& step : steps) {
      auto inside = abs(map.region_value(step.removed));
      decltype(inside) outside;
      try {
        outside = abs(map.region_value(step.added));
      } catch (const precision_error&) {
        overflow = true;
        continue;
      }
      if (tied(inside, outside) || outside >= inside) continue;  // not out
      if (!best_step || outside < best_mod ||
          (outside == best_mod && step.added < best_step->added)) {
        best_step = &step;
        best_mod = outside;
      }
    }
    if (!best_step) {
      if (overflow) {
        out.precision_loss = true;
        out.kind = ReductionOutcome::Kind::DepthExceeded;
        return out;
      }
      out.kind = ReductionOutcome::Kind::SinkFound;
      return out;
    }
    cur = best_step->triangle;
    out.trace.push_back(cur);
  }
  out.kind = ReductionOutcome::Kind::DepthExceeded;
  return out;
}

ReductionOutcome trace_reduce(MarkoffMap& map, const Triangle& start,
                              int depth_cap = 10000);

/// Smallest-modulus region value among all regions of triangles within the
/// given tree distance of the base triangle.  Branches whose values overflow
/// are pruned (their far sides keep growing).  Ties resolve to the smaller
/// slope.
std::pair<Slope, std::complex<double>> min_region_search(MarkoffMap& map,
                                                         int radius);

}  // namespace markoff
