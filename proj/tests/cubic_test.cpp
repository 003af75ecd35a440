#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "markoff/cubic.hpp"

using namespace markoff;
using std::complex;

TEST_SUITE_BEGIN("cubic");

TEST_CASE("solver satisfies Vieta and residual bounds") {
  std::mt19937_64 eng(31);
  std::uniform_real_distribution<double> d(-20.0, 20.0);
  for (int i = 0; i < 2000; ++i) {
    Complex c2{d(eng), d(eng)}, c1{d(eng), d(eng)}, c0{d(eng), d(eng)};
    CubicRoots r = solve_monic_cubic(c2, c1, c0);
    Complex sum = r.roots[0] + r.roots[1] + r.roots[2];
    Complex prod = r.roots[0] * r.roots[1] * r.roots[2];
    Complex pair = r.roots[0] * r.roots[1] + r.roots[0] * r.roots[2] +
                   r.roots[1] * r.roots[2];
    double scale = std::max(
        {1.0, std::abs(c2), std::abs(c1), std::abs(c0), std::abs(prod)});
    CHECK(std::abs(sum + c2) <= 1e-9 * scale);
    CHECK(std::abs(pair - c1) <= 1e-9 * scale);
    CHECK(std::abs(prod + c0) <= 1e-9 * scale);
    for (int k = 0; k < 3; ++k) {
      double m = std::abs(r.roots[k]);
      CHECK(r.residuals[k] <= 1e-10 * std::max(1.0, m * m * m));
    }
    // sorted by modulus, descending
    CHECK(std::abs(r.roots[0]) >= std::abs(r.roots[1]) - 1e-12);
    CHECK(std::abs(r.roots[1]) >= std::abs(r.roots[2]) - 1e-12);
  }
}

TEST_CASE("exact double roots come out exact") {
  // (X - 2)^2 (X + 1) = X^3 - 3X^2 + 4
  CubicRoots r = solve_monic_cubic(-3.0, 0.0, 4.0);
  CHECK(r.has_multiple_root);
  CHECK(r.roots[0] == Complex{2.0, 0.0});
  CHECK(r.roots[1] == Complex{2.0, 0.0});
  CHECK(r.roots[2] == Complex{-1.0, 0.0});

  // X^3: triple root
  CubicRoots t = solve_monic_cubic(0.0, 0.0, 0.0);
  CHECK(t.has_multiple_root);
  for (const Complex& z : t.roots) CHECK(z == Complex{0.0, 0.0});
}

TEST_CASE("dominant root reference values") {
  CHECK(std::abs(dominant_root(0.0) - 3.0) <= 1e-10);
  CHECK(std::abs(dominant_root(4.0) - 2.0) <= 1e-10);
  CHECK(std::abs(dominant_root(54.0) - Complex{3.0, 3.0}) <= 1e-10);
  CHECK(std::abs(std::abs(dominant_root(54.0)) - 3.0 * std::sqrt(2.0)) <=
        1e-10);
  double a = -3.0 - std::sqrt(17.0);
  CHECK(std::abs(dominant_root(a) - (3.0 + std::sqrt(17.0)) / 2.0) <= 1e-10);
}

TEST_CASE("tau is the dominant root's reciprocal") {
  CHECK(std::abs(tau(0.0) - 1.0 / 3.0) <= 1e-14);
  std::mt19937_64 eng(32);
  std::uniform_real_distribution<double> d(-30.0, 30.0);
  for (int i = 0; i < 500; ++i) {
    Complex a{d(eng), d(eng)};
    if (std::abs(a - 4.0) < 1e-6) continue;
    Complex t = dominant_root(a);
    CHECK(std::abs(tau(a) * t - 1.0) <= 1e-9);
    // tau is the smallest-modulus root of -aX^3 + 3X - 1
    Complex v = -a * std::pow(tau(a), 3) + 3.0 * tau(a) - 1.0;
    CHECK(std::abs(v) <= 1e-9);
  }
  // continuity across the a = 0 linear degeneration
  for (double eps : {1e-4, 1e-6, 1e-9}) {
    CHECK(std::abs(tau(Complex{eps, 0.0}) - tau(0.0)) <= 1e-3);
  }
}

TEST_CASE("five real-root regimes") {
  CHECK(classify_real_roots(-1.0).regime == RealRootRegime::UniqueAboveThree);
  CHECK(classify_real_roots(-1.0).roots.size() == 1);
  CHECK(classify_real_roots(-1.0).roots[0] > 3.0);

  RealRootClassification zero = classify_real_roots(0.0);
  CHECK(zero.regime == RealRootRegime::DoubleZeroAndThree);
  REQUIRE(zero.roots.size() == 3);
  CHECK(zero.roots[0] == 3.0);
  CHECK(zero.roots[1] == 0.0);
  CHECK(zero.roots[2] == 0.0);

  RealRootClassification mid = classify_real_roots(2.0);
  CHECK(mid.regime == RealRootRegime::ThreeRealSplit);
  REQUIRE(mid.roots.size() == 3);
  CHECK(mid.roots[0] > 2.0);
  CHECK(mid.roots[0] < 3.0);
  CHECK(std::abs(mid.roots[0] - (1.0 + std::sqrt(3.0))) <= 1e-10);
  for (int k = 1; k < 3; ++k) {
    CHECK(mid.roots[k] > -2.0);
    CHECK(mid.roots[k] < 2.0);
  }

  RealRootClassification four = classify_real_roots(4.0);
  CHECK(four.regime == RealRootRegime::DoubleTwoAndMinusOne);
  REQUIRE(four.roots.size() == 3);
  CHECK(four.roots[0] == 2.0);
  CHECK(four.roots[1] == 2.0);
  CHECK(four.roots[2] == -1.0);

  RealRootClassification high = classify_real_roots(10.0);
  CHECK(high.regime == RealRootRegime::UniqueNegative);
  REQUIRE(high.roots.size() == 1);
  CHECK(high.roots[0] < 0.0);
  CHECK(std::abs(high.roots[0]) < 2.0);  // below the mu = 20 threshold

  // |root| crosses 2 exactly at mu = 20
  CHECK(std::abs(largest_real_root(20.0) + 2.0) <= 1e-12);
  CHECK(std::abs(classify_real_roots(25.0).roots[0]) > 2.0);
}

TEST_CASE("largest real root matches the classification") {
  std::mt19937_64 eng(33);
  std::uniform_real_distribution<double> d(-40.0, 40.0);
  for (int i = 0; i < 500; ++i) {
    double mu = d(eng);
    RealRootClassification c = classify_real_roots(mu);
    double want = c.roots[0];
    for (double r : c.roots)
      if (std::abs(r) > std::abs(want) ||
          (std::abs(r) == std::abs(want) && r > want))
        want = r;
    CHECK(largest_real_root(mu) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("positive sink bound") {
  PositiveBound degenerate = positive_sink_bound(0.0, 0.0, 0.0, 4.0);
  CHECK(degenerate.degenerate);
  CHECK(degenerate.value == doctest::Approx(2.0));

  PositiveBound qf = positive_sink_bound(8.0, 8.0, 8.0, -28.0);
  CHECK_FALSE(qf.degenerate);
  CHECK(std::abs(qf.value - 7.0) <= 1e-10);

  PositiveBound classic = positive_sink_bound(0.0, 0.0, 0.0, 0.0);
  CHECK(classic.value == doctest::Approx(3.0));

  CHECK_THROWS_AS(positive_sink_bound(-1.0, 0.0, 0.0, 0.0),
                  std::domain_error);
  CHECK_THROWS_AS(positive_sink_bound(1.0, 1.0, 1.0, 5.0), std::domain_error);

  // P(bound) = 0 and bound >= 2 on random domain points
  std::mt19937_64 eng(34);
  std::uniform_real_distribution<double> dl(0.0, 25.0);
  std::uniform_real_distribution<double> ds(-40.0, 4.0);
  for (int i = 0; i < 500; ++i) {
    double l1 = dl(eng), l2 = dl(eng), l3 = dl(eng), s = ds(eng);
    PositiveBound b = positive_sink_bound(l1, l2, l3, s);
    double t = b.value;
    double residual = ((t - 3.0) * t - (l1 + l2 + l3)) * t + s;
    CHECK(std::abs(residual) <= 1e-8 * std::max(1.0, t * t * t));
    CHECK(t >= 2.0 - 1e-12);
  }
}

TEST_SUITE_END();
