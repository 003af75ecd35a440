#include <doctest.h>

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "markoff/farey.hpp"

using namespace markoff;

TEST_SUITE_BEGIN("farey");

TEST_CASE("base triangle and construction") {
  Triangle b = base_triangle();
  CHECK(b.regions[0] == make_slope(0, 1));
  CHECK(b.regions[1] == make_slope(1, 1));
  CHECK(b.regions[2] == infinity_slope());
  CHECK(region_of_color(b, 1) == infinity_slope());
  CHECK(region_of_color(b, 2) == make_slope(0, 1));
  CHECK(region_of_color(b, 3) == make_slope(1, 1));

  CHECK(make_triangle(make_slope(1, 2), make_slope(0, 1), make_slope(1, 1)) ==
        make_triangle(make_slope(1, 1), make_slope(1, 2), make_slope(0, 1)));
  CHECK_THROWS_AS(
      make_triangle(make_slope(0, 1), make_slope(1, 1), make_slope(2, 1)),
      std::domain_error);
}

TEST_CASE("edges carry equal-colored opposite regions") {
  TreeEdge e = make_edge(make_slope(0, 1), infinity_slope());
  CHECK(edge_color(e) == 3);  // opposite pair {-1, 1}
  CHECK(color(e.opposite[0]) == color(e.opposite[1]));
  Triangle t0 = edge_endpoint(e, 0), t1 = edge_endpoint(e, 1);
  CHECK(t0 != t1);
  bool has_base = t0 == base_triangle() || t1 == base_triangle();
  CHECK(has_base);
}

TEST_CASE("neighbor steps invert") {
  Triangle b = base_triangle();
  for (const NeighborStep& step : triangle_neighbors(b)) {
    CHECK(step.triangle != b);
    // crossing back recovers the original triangle
    bool found_back = false;
    for (const NeighborStep& back : triangle_neighbors(step.triangle))
      if (back.triangle == b) {
        found_back = true;
        CHECK(back.removed == step.added);
        CHECK(back.added == step.removed);
        CHECK(back.edge == step.edge);
      }
    CHECK(found_back);
  }
}

namespace {

struct Ball {
  std::vector<Triangle> order;
  std::vector<int> depth;
  std::map<Triangle, std::size_t> ids;
};

Ball bfs_ball(int radius) {
  Ball ball;
  ball.order.push_back(base_triangle());
  ball.depth.push_back(0);
  ball.ids.emplace(ball.order[0], 0);
  for (std::size_t head = 0; head < ball.order.size(); ++head) {
    if (ball.depth[head] >= radius) continue;
    const Triangle u = ball.order[head];
    for (const NeighborStep& s : triangle_neighbors(u)) {
      if (ball.ids.count(s.triangle)) continue;
      ball.ids.emplace(s.triangle, ball.order.size());
      ball.order.push_back(s.triangle);
      ball.depth.push_back(ball.depth[head] + 1);
    }
  }
  return ball;
}

}  // namespace

TEST_CASE("the dual graph is a trivalent tree") {
  const int radius = 6;
  Ball ball = bfs_ball(radius);
  // ball size of a trivalent tree: 1 + 3 (2^r - 1)
  CHECK(ball.order.size() == 1 + 3 * ((1u << radius) - 1));

  for (std::size_t i = 0; i < ball.order.size(); ++i) {
    const Triangle& t = ball.order[i];
    // one region of each color
    std::set<int> colors;
    for (const Slope& r : t.regions) colors.insert(color(r));
    CHECK(colors == std::set<int>{1, 2, 3});
    // tree: every neighbor except the parent is discovered strictly later,
    // and exactly one earlier neighbor exists (none for the root)
    int earlier = 0;
    for (const NeighborStep& s : triangle_neighbors(t)) {
      auto it = ball.ids.find(s.triangle);
      if (ball.depth[i] < radius) {
        REQUIRE(it != ball.ids.end());
        if (it->second < i) ++earlier;
      } else if (it != ball.ids.end() && it->second < i) {
        ++earlier;
      }
    }
    CHECK(earlier == (i == 0 ? 0 : 1));
  }
}

TEST_CASE("ancestry agrees with tree search") {
  CHECK_THROWS_AS(slope_ancestry(make_slope(0, 1)), std::domain_error);
  CHECK_THROWS_AS(slope_ancestry(infinity_slope()), std::domain_error);

  // parents carry no promised order, so compare them as a pair
  auto parent_set = [](const SlopeAncestry& a) {
    return std::set<Slope>{a.parents[0], a.parents[1]};
  };

  SlopeAncestry half = slope_ancestry(make_slope(1, 2));
  CHECK(parent_set(half) ==
        std::set<Slope>{make_slope(0, 1), make_slope(1, 1)});
  CHECK(half.back == infinity_slope());

  SlopeAncestry two = slope_ancestry(make_slope(2, 1));
  CHECK(parent_set(two) ==
        std::set<Slope>{make_slope(1, 1), infinity_slope()});
  CHECK(two.back == make_slope(0, 1));

  SlopeAncestry neg = slope_ancestry(make_slope(-1, 1));
  CHECK(parent_set(neg) ==
        std::set<Slope>{make_slope(0, 1), infinity_slope()});
  CHECK(neg.back == make_slope(1, 1));

  // every region first seen in the ball was born through its ancestry
  // triangle: {parents, s} is a triangle, back completes parents into the
  // earlier one, and back has the color of s
  Ball ball = bfs_ball(7);
  const Triangle base = base_triangle();
  std::set<Slope> base_regions(base.regions.begin(), base.regions.end());
  std::set<Slope> seen;
  for (const Triangle& t : ball.order)
    for (const Slope& r : t.regions) {
      if (base_regions.count(r) || !seen.insert(r).second) continue;
      SlopeAncestry anc = slope_ancestry(r);
      CHECK(ball.ids.count(make_triangle(anc.parents[0], anc.parents[1], r)));
      CHECK(ball.ids.count(
          make_triangle(anc.parents[0], anc.parents[1], anc.back)));
      CHECK(color(anc.back) == color(r));
      // r and back flank the parents' edge: its two common neighbors
      auto cn = common_neighbors(anc.parents[0], anc.parents[1]);
      CHECK(((cn[0] == r && cn[1] == anc.back) ||
             (cn[1] == r && cn[0] == anc.back)));
    }
}

TEST_CASE("slope words") {
  CHECK(to_string(slope_word(infinity_slope())) == "a");
  CHECK(to_string(slope_word(make_slope(0, 1))) == "b");
  CHECK(to_string(slope_word(make_slope(1, 1))) == "ab");
  CHECK(to_string(slope_word(make_slope(1, 2))) == "abb");
  CHECK(to_string(slope_word(make_slope(2, 1))) == "aab");
  CHECK(to_string(slope_word(make_slope(-1, 1))) == "aB");

  std::mt19937_64 eng(21);
  std::uniform_int_distribution<std::int64_t> d(-60, 60);
  std::uniform_int_distribution<std::int64_t> dq(1, 60);
  for (int i = 0; i < 300; ++i) {
    Slope s = make_slope(d(eng), dq(eng));
    Word w = slope_word(s);
    CHECK(is_freely_reduced(w));
    CHECK(is_primitive_word(w));
    auto [ea, eb] = word_exponents(w);
    CHECK(ea == (s.p < 0 ? -s.p : s.p));
    CHECK(eb == (s.p < 0 ? -s.q : s.q));
  }
}

TEST_SUITE_END();
