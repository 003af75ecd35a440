#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <variant>

#include "markoff/charvar.hpp"

using namespace markoff;
using Cx = std::complex<double>;

namespace {

Cx rand_cx(std::mt19937_64& eng, double radius) {
  std::uniform_real_distribution<double> d(-radius, radius);
  return {d(eng), d(eng)};
}

// determinant-1 matrix with moderate entries
Mat2 rand_sl2(std::mt19937_64& eng) {
  Cx a;
  do {
    a = rand_cx(eng, 1.2);
  } while (std::abs(a) < 0.3);
  Cx b = rand_cx(eng, 1.2), c = rand_cx(eng, 1.2);
  return Mat2{a, b, c, (1.0 + b * c) / a};
}

Word word_from(const char* s) {
  Word w;
  for (; *s; ++s) switch (*s) {
      case 'a': w.letters.push_back(Letter::a); break;
      case 'b': w.letters.push_back(Letter::b); break;
      case 'A': w.letters.push_back(Letter::A); break;
      default: w.letters.push_back(Letter::B); break;
    }
  return w;
}

}  // namespace

TEST_SUITE_BEGIN("charvar");

TEST_CASE("matrix algebra") {
  Mat2 m{1.0, 2.0, 3.0, 4.0}, n{5.0, 6.0, 7.0, 8.0};
  Mat2 p = m * n;
  CHECK(p.a == Cx{19.0});
  CHECK(p.b == Cx{22.0});
  CHECK(p.c == Cx{43.0});
  CHECK(p.d == Cx{50.0});
  CHECK(trace(m) == Cx{5.0});
  CHECK(det(m) == Cx{-2.0});

  std::mt19937_64 eng(51);
  for (int i = 0; i < 100; ++i) {
    Mat2 g = rand_sl2(eng);
    CHECK(std::abs(det(g) - 1.0) <= 1e-12);
    Mat2 id = g * unimodular_inverse(g);
    CHECK(std::abs(id.a - 1.0) <= 1e-10);
    CHECK(std::abs(id.b) <= 1e-10);
    CHECK(std::abs(id.c) <= 1e-10);
    CHECK(std::abs(id.d - 1.0) <= 1e-10);
  }
}

TEST_CASE("realized matrices hit the requested traces") {
  auto [A, B] = realize_matrices(3.0, 3.0, 3.0);
  CHECK(A.a == Cx{3.0});
  CHECK(A.b == Cx{-1.0});
  CHECK(A.c == Cx{1.0});
  CHECK(A.d == Cx{0.0});
  CHECK(std::abs(trace(B) - 3.0) <= 1e-12);
  CHECK(std::abs(trace(A * B) - 3.0) <= 1e-12);
  CHECK(std::abs(det(B) - 1.0) <= 1e-12);

  std::mt19937_64 eng(52);
  int kept = 0;
  while (kept < 200) {
    Cx x = rand_cx(eng, 4), y = rand_cx(eng, 4), z = rand_cx(eng, 4);
    Cx rel = x * x + y * y + z * z - x * y * z;
    if (std::abs(rel - 4.0) < 1e-6) continue;
    ++kept;
    auto [P, Q] = realize_matrices(x, y, z);
    CHECK(std::abs(trace(P) - x) <= 1e-10);
    CHECK(std::abs(trace(Q) - y) <= 1e-10);
    CHECK(std::abs(trace(P * Q) - z) <= 1e-10);
    CHECK(std::abs(det(P) - 1.0) <= 1e-10);
    CHECK(std::abs(det(Q) - 1.0) <= 1e-10);
  }

  // reducible locus: x^2 + y^2 + z^2 - xyz = 4
  CHECK_THROWS_AS(realize_matrices(2.0, 2.0, 2.0), reducible_error);
  CHECK_THROWS_AS(realize_matrices(2.0, 0.0, 0.0), reducible_error);
}

TEST_CASE("word traces") {
  auto [A, B] = realize_matrices(3.0, 4.0, 5.0);
  CHECK(std::abs(word_trace(A, B, word_from("a")) - 3.0) <= 1e-10);
  CHECK(std::abs(word_trace(A, B, word_from("b")) - 4.0) <= 1e-10);
  CHECK(std::abs(word_trace(A, B, word_from("ab")) - 5.0) <= 1e-10);
  CHECK(std::abs(word_trace(A, B, Word{}) - 2.0) <= 1e-12);

  // tr M = tr M^-1 in SL2: aB and its inverse bA
  CHECK(std::abs(word_trace(A, B, word_from("aB")) -
                 word_trace(A, B, word_from("bA"))) <= 1e-10);
  // tr(AB) + tr(AB^-1) = tr A tr B
  CHECK(std::abs(word_trace(A, B, word_from("ab")) +
                 word_trace(A, B, word_from("aB")) - 12.0) <= 1e-10);
  // tr((AB)^2) = tr(AB)^2 - 2
  CHECK(std::abs(word_trace(A, B, word_from("abab")) - 23.0) <= 1e-10);

  // slope words yield the classic region values: tr(AB^2) = zy - x
  auto [C, D] = realize_matrices(3.0, 3.0, 3.0);
  CHECK(std::abs(word_trace(C, D, slope_word(make_slope(1, 2))) - 6.0) <=
        1e-10);
  CHECK(std::abs(word_trace(C, D, slope_word(make_slope(2, 5))) - 87.0) <=
        1e-8);
}

TEST_CASE("boundary trace quadruple map") {
  MuParams qf = gt_map(2.0, 2.0, 2.0, 2.0);
  CHECK(qf.lambda1 == Cx{8.0});
  CHECK(qf.lambda2 == Cx{8.0});
  CHECK(qf.lambda3 == Cx{8.0});
  CHECK(qf.s == Cx{-28.0});

  std::mt19937_64 eng(53);
  for (int i = 0; i < 200; ++i) {
    Cx a = rand_cx(eng, 3), b = rand_cx(eng, 3), c = rand_cx(eng, 3),
       d = rand_cx(eng, 3);
    MuParams m = gt_map(a, b, c, d);
    // swapping the last two inputs fixes lambda1 and swaps lambda2, lambda3
    MuParams sw = gt_map(a, b, d, c);
    CHECK(std::abs(sw.lambda1 - m.lambda1) <= 1e-10);
    CHECK(std::abs(sw.lambda2 - m.lambda3) <= 1e-10);
    CHECK(std::abs(sw.lambda3 - m.lambda2) <= 1e-10);
    CHECK(std::abs(sw.s - m.s) <= 1e-10);
    // s is symmetric under every permutation
    CHECK(std::abs(gt_map(d, c, a, b).s - m.s) <= 1e-10);
    CHECK(std::abs(gt_map(b, a, c, d).s - m.s) <= 1e-10);
  }
}

TEST_CASE("torus vertex parameters") {
  MuParams m = torus_mu(Cx{-2.0});
  CHECK(m.lambda1 == Cx{0.0});
  CHECK(m.lambda2 == Cx{0.0});
  CHECK(m.lambda3 == Cx{0.0});
  CHECK(m.s == Cx{0.0});
  CHECK(torus_mu(Cx{18.0}).s == Cx{20.0});
}

TEST_CASE("sphere characters satisfy the vertex equation") {
  // the sink (7, 7, 7) for boundary (2, 2, 2, 2) comes from the equatorial
  // triple (-7, -7, -7)
  auto [t0, m0] = sphere_rep_to_markoff(-7.0, -7.0, -7.0,
                                        {2.0, 2.0, 2.0, 2.0});
  CHECK(t0.x1 == Cx{7.0});
  CHECK(std::abs(vertex_residual(t0, m0)) <= 1e-9);

  // matrix-level identity: A, B, C random in SL2, D = (ABC)^-1, equatorial
  // traces (tr AB, tr BC, tr CA)
  std::mt19937_64 eng(54);
  for (int i = 0; i < 200; ++i) {
    Mat2 A = rand_sl2(eng), B = rand_sl2(eng), C = rand_sl2(eng);
    Mat2 D = unimodular_inverse(A * B * C);
    std::array<Cx, 4> boundary{trace(A), trace(B), trace(C), trace(D)};
    Cx x = trace(A * B), y = trace(B * C), z = trace(C * A);
    auto [t, m] = sphere_rep_to_markoff(x, y, z, boundary);
    double scale = std::max({1.0, std::abs(x), std::abs(y), std::abs(z)});
    CHECK(std::abs(vertex_residual(t, m)) <= 1e-8 * scale * scale * scale);
  }

  // solving the relation for the third trace lands on the variety too
  std::mt19937_64 eng2(55);
  for (int i = 0; i < 200; ++i) {
    std::array<Cx, 4> bd{rand_cx(eng2, 3), rand_cx(eng2, 3), rand_cx(eng2, 3),
                         rand_cx(eng2, 3)};
    MuParams m = gt_map(bd[0], bd[1], bd[2], bd[3]);
    Cx x = rand_cx(eng2, 3), y = rand_cx(eng2, 3);
    // z^2 + (xy - l3) z + (x^2 + y^2 - l1 x - l2 y - s) = 0
    Cx p = x * y - m.lambda3;
    Cx q = x * x + y * y - m.lambda1 * x - m.lambda2 * y - m.s;
    Cx zr = (-p + std::sqrt(p * p - 4.0 * q)) / 2.0;
    auto [t, mm] = sphere_rep_to_markoff(x, y, zr, bd);
    double scale = std::max({1.0, std::abs(x), std::abs(y), std::abs(zr)});
    CHECK(std::abs(vertex_residual(t, mm)) <= 1e-8 * scale * scale * scale);
  }
}

TEST_CASE("genus-3 nonorientable quadruple variety") {
  double t = std::sqrt(3.0 + std::sqrt(17.0));
  Cx ti{0.0, t};
  CHECK(n3_check(ti, ti, ti, -ti));
  CHECK_FALSE(n3_check(Cx{0.0, 2.0}, Cx{0.0, 2.0}, Cx{0.0, 2.0},
                       Cx{0.0, -2.0}));
  CHECK(n3_check(2.0, 0.0, 0.0, 0.0));

  auto got = n3_to_markoff(ti, ti, ti, -ti);
  auto& [triple, mu] = std::get<std::pair<MarkoffTriple, MuParams>>(got);
  double half = (3.0 + std::sqrt(17.0)) / 2.0;
  CHECK(std::abs(triple.x1 - half) <= 1e-12);
  CHECK(std::abs(triple.x2 - half) <= 1e-12);
  CHECK(std::abs(triple.x3 - half) <= 1e-12);
  CHECK(std::abs(mu.s - (-t * t)) <= 1e-12);
  CHECK(std::abs(vertex_residual(triple, mu)) <= 1e-9);

  // d = 0 degenerates to the quadric a^2 + b^2 + c^2 = 4, inducing no map
  auto z0 = n3_to_markoff(2.0, 0.0, 0.0, 0.0);
  CHECK(std::get<N3DZeroBranch>(z0).on_unit_quadric);

  // off the variety is a domain error whether or not d vanishes
  CHECK_THROWS_AS(n3_to_markoff(1.0, 0.0, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(n3_to_markoff(1.0, 1.0, 1.0, 1.0), std::domain_error);

  // random on-variety points by solving for c
  std::mt19937_64 eng(56);
  for (int i = 0; i < 200; ++i) {
    Cx a = rand_cx(eng, 3), b = rand_cx(eng, 3), d = rand_cx(eng, 3);
    if (std::abs(d) < 1e-3) continue;
    Cx p = -a * b * d / 2.0;
    Cx q = a * a + b * b - 4.0;
    Cx c = (-p + std::sqrt(p * p - 4.0 * q)) / 2.0;
    if (!n3_check(a, b, c, d)) continue;  // conditioning rejects
    auto r = n3_to_markoff(a, b, c, d);
    auto& [tr2, mu2] = std::get<std::pair<MarkoffTriple, MuParams>>(r);
    double scale = std::max({1.0, std::abs(a) * std::abs(d),
                             std::abs(b) * std::abs(d),
                             std::abs(c) * std::abs(d)});
    CHECK(std::abs(vertex_residual(tr2, mu2)) <=
          1e-8 * scale * scale * scale);
  }
}

TEST_CASE("torus word oracle") {
  OracleResult out = cross_check_torus_words(5, 8, 71);
  CHECK(out.passed);
  CHECK(out.trials == 5);
  CHECK(out.comparisons > 5 * 20);
  CHECK(out.max_rel_error <= 1e-8);
  CHECK(out.seed == 71);

  // deterministic in the seed
  OracleResult again = cross_check_torus_words(5, 8, 71);
  CHECK(again.max_rel_error == out.max_rel_error);
  CHECK(again.comparisons == out.comparisons);
}

TEST_SUITE_END();
