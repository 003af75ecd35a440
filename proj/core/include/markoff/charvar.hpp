#pragma once

/**
 * @file charvar.hpp
 * @brief SL(2,C) character computations: explicit matrix realizations of
 *        trace triples, word traces, the trace quadruple map for spheres,
 *        and the analogous quadruple variety for the non-orientable genus-3
 *        surface.
 */

#include <array>
#include <complex>
#include <cstdint>
#include <utility>
#include <variant>

#include "markoff/farey.hpp"
#include "markoff/markoff_map.hpp"

namespace markoff {

/// Raised by realize_matrices on the reducible locus x^2+y^2+z^2-xyz = 4.
struct reducible_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// 2x2 complex matrix, row major.
struct Mat2 {
  std::complex<double> a{}, b{}, c{}, d{};
};

Mat2 operator*(const Mat2& m, const Mat2& n);
std::complex<double> trace(const Mat2& m);
std::complex<double> det(const Mat2& m);
/// Inverse of a determinant-1 matrix (adjugate).
Mat2 unimodular_inverse(const Mat2& m);

/// A pair (A, B) with tr A = x, tr B = y, tr AB = z:
///   A = [[x, -1], [1, 0]],  B = [[0, xi], [-1/xi, y]],  xi + 1/xi = z,
/// with |xi| >= 1 and ties broken toward positive imaginary part.
/// Throws reducible_error when x^2+y^2+z^2-xyz = 4 within 1e-10.
std::pair<Mat2, Mat2> realize_matrices(std::complex<double> x,
                                       std::complex<double> y,
                                       std::complex<double> z);

/// Trace of the word evaluated at generators A, B.
std::complex<double> word_trace(const Mat2& A, const Mat2& B, const Word& w);

/// Vertex parameters of the once-punctured torus with commutator trace k:
/// (0, 0, 0, k + 2).  Degenerate at k = 2 (reducible locus).
MuParams torus_mu(std::complex<double> k);

/// Trace quadruple map for the four-punctured sphere: boundary traces
/// (a, b, c, d) to vertex parameters
///   (ab+cd, ad+bc, ac+bd, 4 - a^2 - b^2 - c^2 - d^2 - abcd).
/// Fixing the first component, swapping two inputs swaps the middle two
/// outputs; the last is symmetric.
MuParams gt_map(std::complex<double> a, std::complex<double> b,
                std::complex<double> c, std::complex<double> d);

/// Negated equatorial trace triple of a sphere character, paired with the
/// vertex parameters from its boundary quadruple.  The Markoff vertex
/// residual of the result vanishes exactly when (x, y, z) lies on the
/// sphere's relation variety.
std::pair<MarkoffTriple, MuParams> sphere_rep_to_markoff(
    std::complex<double> x, std::complex<double> y, std::complex<double> z,
    const std::array<std::complex<double>, 4>& boundary);

/// Membership in the quadruple variety a^2 + b^2 + c^2 - abc d/2 = 4 of the
/// non-orientable genus-3 surface, within 1e-10.
bool n3_check(std::complex<double> a, std::complex<double> b,
              std::complex<double> c, std::complex<double> d);

/// d = 0 branch marker: the variety degenerates to a^2 + b^2 + c^2 = 4 and
/// induces no Markoff map.
struct N3DZeroBranch {
  bool on_unit_quadric = false;
};

/// For d != 0, the induced map data: triple (cd/2, ad/2, bd/2) on the
/// parameters (0, 0, 0, d^2).  Throws std::domain_error off the variety.
std::variant<std::pair<MarkoffTriple, MuParams>, N3DZeroBranch> n3_to_markoff(
    std::complex<double> a, std::complex<double> b, std::complex<double> c,
    std::complex<double> d);

/// Cross-check of the two routes to region values: matrix traces of slope
/// words versus the vertex-equation recursion, over random irreducible
/// triples and every slope with |numerator| and denominator bounded by
/// max_denominator.
struct OracleResult {
  std::size_t trials = 0;
  std::size_t comparisons = 0;
  double max_rel_error = 0.0;
  bool passed = false;
  std::uint64_t seed = 0;
};

OracleResult cross_check_torus_words(std::size_t trials,
                                     std::int64_t max_denominator,
                                     std::uint64_t seed,
                                     double rel_tol = 1e-8);

}  // namespace markoff
