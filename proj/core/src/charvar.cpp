#include "markoff/charvar.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "sampling.hpp"

namespace markoff {

using detail::disk_sample;

namespace {

using Cx = std::complex<double>;

}  // namespace

Mat2 operator*(const Mat2& m, const Mat2& n) {
  return Mat2{m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
              m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Cx trace(const Mat2& m) { return m.a + m.d; }

Cx det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

Mat2 unimodular_inverse(const Mat2& m) { return Mat2{m.d, -m.b, -m.c, m.a}; }

std::pair<Mat2, Mat2> realize_matrices(Cx x, Cx y, Cx z) {
  Cx rel = x * x + y * y + z * z - x * y * z;
  if (std::abs(rel - 4.0) <= 1e-10)
    throw reducible_error("trace triple lies on the reducible locus");
  Cx disc = std::sqrt(z * z - 4.0);
  Cx xi1 = (z + disc) / 2.0;
  Cx xi2 = (z - disc) / 2.0;
  Cx xi;
  double m1 = std::abs(xi1), m2 = std::abs(xi2);
  if (std::abs(m1 - m2) <= 1e-12 * std::max(1.0, m1))
    xi = xi1.imag() >= xi2.imag() ? xi1 : xi2;
  else
    xi = m1 > m2 ? xi1 : xi2;
  Mat2 A{x, Cx(-1.0), Cx(1.0), Cx(0.0)};
  Mat2 B{Cx(0.0), xi, -1.0 / xi, y};
  return {A, B};
}

Cx word_trace(const Mat2& A, const Mat2& B, const Word& w) {
  Mat2 acc{Cx(1.0), Cx(0.0), Cx(0.0), Cx(1.0)};
  Mat2 Ai = unimodular_inverse(A);
  Mat2 Bi = unimodular_inverse(B);
  for (Letter l : w.letters) {
    switch (l) {
      case Letter::a: acc = acc * A; break;
      case Letter::A: acc = acc * Ai; break;
      case Letter::b: acc = acc * B; break;
      case Letter::B: acc = acc * Bi; break;
    }
  }
  return trace(acc);
}

MuParams torus_mu(Cx k) { return MuParams{Cx(0.0), Cx(0.0), Cx(0.0), k + 2.0}; }

MuParams gt_map(Cx a, Cx b, Cx c, Cx d) {
  return MuParams{a * b + c * d, a * d + b * c, a * c + b * d,
                  4.0 - a * a - b * b - c * c - d * d - a * b * c * d};
}

std::pair<MarkoffTriple, MuParams> sphere_rep_to_markoff(
    Cx x, Cx y, Cx z, const std::array<Cx, 4>& boundary) {
  MuParams mu = gt_map(boundary[0], boundary[1], boundary[2], boundary[3]);
  return {MarkoffTriple{-x, -y, -z}, mu};
}

bool n3_check(Cx a, Cx b, Cx c, Cx d) {
  Cx rel = a * a + b * b + c * c - a * b * c * d / 2.0;
  return std::abs(rel - 4.0) <= 1e-10;
}

std::variant<std::pair<MarkoffTriple, MuParams>, N3DZeroBranch> n3_to_markoff(
    Cx a, Cx b, Cx c, Cx d) {
  if (!n3_check(a, b, c, d))
    throw std::domain_error("quadruple is not on the genus-3 variety");
  if (d == Cx(0.0)) {
    N3DZeroBranch branch;
    branch.on_unit_quadric = std::abs(a * a + b * b + c * c - 4.0) <= 1e-10;
    return branch;
  }
  MarkoffTriple t{c * d / 2.0, a * d / 2.0, b * d / 2.0};
  MuParams mu{Cx(0.0), Cx(0.0), Cx(0.0), d * d};
  return std::pair{t, mu};
}

OracleResult cross_check_torus_words(std::size_t trials,
                                     std::int64_t max_denominator,
                                     std::uint64_t seed, double rel_tol) {
  OracleResult out;
  out.trials = trials;
  out.seed = seed;

  std::vector<Slope> slopes;
  slopes.push_back(infinity_slope());
  for (std::int64_t q = 1; q <= max_denominator; ++q)
    for (std::int64_t p = -max_denominator; p <= max_denominator; ++p)
      if (std::gcd(p < 0 ? -p : p, q) == 1) slopes.push_back(make_slope(p, q));

  std::vector<Word> words;
  words.reserve(slopes.size());
  for (const Slope& s : slopes) words.push_back(slope_word(s));

  std::mt19937_64 eng(seed);
  out.passed = true;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Cx x, y, z;
    for (;;) {
      x = disk_sample(eng, 3.0);
      y = disk_sample(eng, 3.0);
      z = disk_sample(eng, 3.0);
      Cx rel = x * x + y * y + z * z - x * y * z;
      if (std::abs(rel - 4.0) > 0.1) break;  // stay off the reducible locus
    }
    auto [A, B] = realize_matrices(x, y, z);
    MuParams mu = torus_mu(x * x + y * y + z * z - x * y * z - 2.0);
    MarkoffMap map(mu, MarkoffTriple{x, y, z});
    for (std::size_t i = 0; i < slopes.size(); ++i) {
      Cx via_map = map.region_value(slopes[i]);
      Cx via_trace = word_trace(A, B, words[i]);
      double rel_err = std::abs(via_map - via_trace) /
                       std::max(1.0, std::abs(via_map));
      ++out.comparisons;
      if (rel_err > out.max_rel_error) out.max_rel_error = rel_err;
      if (rel_err > rel_tol) out.passed = false;
    }
  }
  return out;
}

}  // namespace markoff
