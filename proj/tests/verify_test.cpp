#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include <nlohmann/json.hpp>

#include "markoff/cubic.hpp"
#include "markoff/serialize.hpp"
#include "markoff/verify.hpp"

using namespace markoff;
using Cx = std::complex<double>;

TEST_SUITE_BEGIN("verify");

TEST_CASE("complex sink constant: deterministic across workers") {
  VerificationReport one = verify_complex_sink_constant(0.0, 16384, 777, 1);
  VerificationReport four = verify_complex_sink_constant(0.0, 16384, 777, 4);

  CHECK(one.passed);
  CHECK(one.samples == 16384);
  CHECK(one.kept > 0);
  CHECK(one.seed == 777);

  // bit-identical merge regardless of the worker split
  CHECK(one.worst_margin == four.worst_margin);
  CHECK(one.kept == four.kept);
  for (int i = 0; i < 3; ++i) {
    CHECK(one.witness[i].real() == four.witness[i].real());
    CHECK(one.witness[i].imag() == four.witness[i].imag());
  }
  CHECK(to_json(one).dump() == to_json(four).dump());

  // replaying the same seed reproduces the report exactly
  VerificationReport again = verify_complex_sink_constant(0.0, 16384, 777, 1);
  CHECK(to_json(again).dump() == to_json(one).dump());

  // the refinement walks the witness to the diagonal (tau, tau, tau)
  Cx t = tau(0.0);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(one.witness[i] - t) <= 1e-2);
  CHECK(one.worst_margin >= -1e-6);
}

TEST_CASE("complex sink constant: other parameters and the degenerate m") {
  VerificationReport r = verify_complex_sink_constant(Cx{2.0, 1.0}, 8192, 9);
  CHECK(r.passed);
  Cx t = tau(Cx{2.0, 1.0});
  for (int i = 0; i < 3; ++i) CHECK(std::abs(r.witness[i] - t) <= 1e-2);

  CHECK_THROWS_AS(verify_complex_sink_constant(4.0, 1024, 1),
                  std::domain_error);
}

TEST_CASE("real sink grid") {
  VerificationReport r = verify_real_sink(0.0, 6.0, 80);
  CHECK(r.passed);
  CHECK(r.kept > 0);
  // bound max(|t'_0|, 2) = 3 shows up in the details
  CHECK(r.details.find("real-root bound 3") != std::string::npos);

  CHECK(verify_real_sink(54.0, 6.0, 80).passed);
  CHECK(verify_real_sink(-1.0, 6.0, 80).passed);
  CHECK_THROWS_AS(verify_real_sink(4.0, 6.0, 80), std::domain_error);
}

TEST_CASE("positive sink sampling") {
  MuParams qf{8.0, 8.0, 8.0, -28.0};
  VerificationReport r = verify_positive_sink(qf, 8192, 31, 1);
  CHECK(r.passed);
  CHECK(r.kept > 0);
  // every witness coordinate is a positive number >= 2; the smallest one
  // must respect the bound 7
  double mn = std::min({r.witness[0].real(), r.witness[1].real(),
                        r.witness[2].real()});
  CHECK(mn >= 2.0);
  CHECK(mn <= 7.0 + 1e-8);

  VerificationReport three = verify_positive_sink(qf, 8192, 31, 3);
  CHECK(to_json(three).dump() == to_json(r).dump());

  CHECK(verify_positive_sink(MuParams{0.0, 0.0, 0.0, 0.0}, 8192, 31).passed);

  CHECK_THROWS_AS(verify_positive_sink(MuParams{-1.0, 8.0, 8.0, 0.0}, 64, 1),
                  std::domain_error);
  CHECK_THROWS_AS(verify_positive_sink(MuParams{8.0, 8.0, 8.0, 5.0}, 64, 1),
                  std::domain_error);
  CHECK_THROWS_AS(
      verify_positive_sink(MuParams{Cx{8.0, 1.0}, 8.0, 8.0, 0.0}, 64, 1),
      std::domain_error);
}

TEST_CASE("no retained samples means no pass") {
  CHECK_THROWS_AS(verify_positive_sink(MuParams{8.0, 8.0, 8.0, -28.0}, 0, 1),
                  std::invalid_argument);

  // seed 3 draws one (x, y) close to the corner (2, 2), where the
  // discriminant is negative: the sample is rejected and nothing is kept
  VerificationReport r =
      verify_positive_sink(MuParams{8.0, 8.0, 8.0, -28.0}, 1, 3);
  CHECK_FALSE(r.passed);
  CHECK(r.kept == 0);
  CHECK(r.worst_margin == 0.0);
  CHECK(r.details.find("no samples") != std::string::npos);
}

TEST_CASE("hat transform") {
  MarkoffTriple hat = hat_transform(MarkoffTriple{7.0, 7.0, 7.0});
  CHECK(hat.x1 == Cx{9.0});
  CHECK(hat.x2 == Cx{9.0});
  CHECK(hat.x3 == Cx{9.0});
  // (9+9+9)^2 = 9*9*9 exactly
  Cx sum = hat.x1 + hat.x2 + hat.x3;
  CHECK(sum * sum == hat.x1 * hat.x2 * hat.x3);

  CHECK_THROWS_AS(hat_transform(MarkoffTriple{1.0, 1.0, 1.0}),
                  std::domain_error);

  // random real points of the (8,8,8,-28) variety shift onto (x+y+z)^2 = xyz
  std::mt19937_64 eng(83);
  std::uniform_real_distribution<double> d(2.0, 30.0);
  int kept = 0;
  while (kept < 100) {
    double x = d(eng), y = d(eng);
    double b = 8.0 - x * y;
    double c = x * x + y * y + 8.0 * x + 8.0 * y + 28.0;
    double disc = b * b - 4.0 * c;
    if (disc < 0.0) continue;
    double z = (-b + std::sqrt(disc)) / 2.0;
    MarkoffTriple h = hat_transform(MarkoffTriple{x, y, z});
    Cx s = h.x1 + h.x2 + h.x3;
    double scale = std::max(1.0, std::abs(h.x1 * h.x2 * h.x3));
    CHECK(std::abs(s * s - h.x1 * h.x2 * h.x3) <= 1e-8 * scale);
    ++kept;
  }
}

TEST_CASE("hat lemma sampling") {
  VerificationReport r = verify_hat_lemma(8192, 5, 1);
  CHECK(r.passed);
  CHECK(r.kept > 0);
  CHECK(r.worst_margin > 0.0);

  VerificationReport three = verify_hat_lemma(8192, 5, 3);
  CHECK(to_json(three).dump() == to_json(r).dump());
}

TEST_CASE("genus-2 corner inequalities") {
  VerificationReport both = genus2_corner_check(8, 8, CornerCase::Both);
  CHECK(both.passed);
  CHECK(both.kept > 0);
  CHECK(both.worst_margin > 0.0);

  CHECK(genus2_corner_check(8, 8, CornerCase::SteepBranch).passed);
  CHECK(genus2_corner_check(8, 8, CornerCase::ShallowBranch).passed);
}

TEST_CASE("complex literals") {
  CHECK(parse_complex("3.5") == Cx{3.5});
  CHECK(parse_complex("-2") == Cx{-2.0});
  CHECK(parse_complex("1+2i") == Cx{1.0, 2.0});
  CHECK(parse_complex("1.5-0.5i") == Cx{1.5, -0.5});
  CHECK(parse_complex("2i") == Cx{0.0, 2.0});
  CHECK(parse_complex("i") == Cx{0.0, 1.0});

  CHECK_THROWS_AS(parse_complex(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex("1+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex("i1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex("1 + 2i"), std::invalid_argument);

  // format and parse round trip
  std::mt19937_64 eng(84);
  std::uniform_real_distribution<double> d(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    Cx v{d(eng), d(eng)};
    Cx back = parse_complex(format_complex(v));
    CHECK(std::abs(back - v) <= 1e-12 * std::max(1.0, std::abs(v)));
  }
  CHECK(format_complex(Cx{3.0}) == "3");
  CHECK(complex_json(Cx{1.0, -2.0}).dump() == "[1.0,-2.0]");
}

TEST_SUITE_END();
