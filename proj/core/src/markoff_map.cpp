#include "markoff/markoff_map.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace markoff {

namespace {

bool tied(double za, double zb) {
  return std::abs(za - zb) <= 1e-12 * std::max({1.0, za, zb});
}

}  // namespace

Orientation orient_edge(MarkoffMap& map, const TreeEdge& e) {
  double z0 = std::abs(map.region_value(e.opposite[0]));
  double z1 = std::abs(map.region_value(e.opposite[1]));
  if (tied(z0, z1)) return Orientation::Both;
  return z0 < z1 ? Orientation::TowardFirst : Orientation::TowardSecond;
}

VertexType classify_vertex(MarkoffMap& map, const Triangle& t) {
  int outgoing = 0;
  for (const NeighborStep& step : triangle_neighbors(t)) {
    double inside = std::abs(map.region_value(step.removed));
    double outside = std::abs(map.region_value(step.added));
    if (!tied(inside, outside) && outside < inside) ++outgoing;
  }
  switch (outgoing) {
    case 0: return VertexType::Sink;
    case 1: return VertexType::Merge;
    case 2: return VertexType::Fork;
    default: return VertexType::Source;
  }
}

ReductionOutcome trace_reduce(MarkoffMap& map, const Triangle& start,
                              int depth_cap) {
  return basic_trace_reduce(map, start, depth_cap);
}

std::pair<Slope, std::complex<double>> min_region_search(MarkoffMap& map,
                                                         int radius) {
  Triangle root = base_triangle();
  std::set<Triangle> seen{root};
  std::deque<std::pair<Triangle, int>> queue{{root, 0}};
  bool have_best = false;
  Slope best_slope = infinity_slope();
  double best_mod = 0.0;
  std::complex<double> best_value;

  auto consider = [&](const Slope& s, std::complex<double> v) {
    double m = std::abs(v);
    if (!have_best || m < best_mod ||
        (m == best_mod && s < best_slope)) {
      have_best = true;
      best_slope = s;
      best_mod = m;
      best_value = v;
    }
  };

  for (const Slope& s : root.regions) consider(s, map.region_value(s));
  while (!queue.empty()) {
    auto [tri, depth] = queue.front();
    queue.pop_front();
    if (depth >= radius) continue;
    for (const NeighborStep& step : triangle_neighbors(tri)) {
      if (seen.count(step.triangle)) continue;
      std::complex<double> v;
      try {
        v = map.region_value(step.added);
      } catch (const precision_error&) {
        continue;  // far side only grows; prune
      }
      seen.insert(step.triangle);
      consider(step.added, v);
      queue.push_back({step.triangle, depth + 1});
    }
  }
  return {best_slope, best_value};
}

}  // namespace markoff
