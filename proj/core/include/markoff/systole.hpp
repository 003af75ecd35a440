#pragma once

/**
 * @file systole.hpp
 * @brief Trace-to-length conversion and trace-systole bounds: the torus
 *        family with boundary (geodesic, cusp, cone point), the
 *        four-punctured sphere, the non-orientable genus-3 surface and its
 *        quasi-Fuchsian analogues, and the non-Fuchsian torus dichotomy.
 */

#include <array>
#include <complex>
#include <string>

#include "markoff/cubic.hpp"
#include "markoff/markoff_map.hpp"

namespace markoff {

enum class CurveSide { TwoSided, OneSided };

/// Geodesic length of a curve with real trace t: 2 acosh(t/2) for two-sided
/// curves (t >= 2; smaller traces are elliptic and rejected), 2 asinh(t/2)
/// for one-sided curves (t >= 0).
double trace_to_length(double t, CurveSide side);

/// Trace systole of the torus family with commutator trace k: the modulus of
/// the dominant root of X^3 - 3X^2 + (k+2).  k = 2 is the reducible locus
/// and is rejected.
double tys_torus(std::complex<double> k);

/// Boundary data of a hyperbolic once-punctured torus.
struct BoundarySpec {
  enum class Kind { GeodesicLength, Cusp, ConeAngle };
  Kind kind = Kind::Cusp;
  double value = 0.0;  // length l > 0, or cone angle in (0, 2*pi)
};

/// A bound on a systole-type quantity, tagged with what it bounds.
struct SystoleBound {
  enum class Quantity { CoshHalfSys, CoshSys, Length };
  Quantity quantity = Quantity::Length;
  double value = 0.0;
  std::string context;
};

/// Sharp systole bound for the torus: cosh(sys/2) <= cosh(l/6) + 1/2 for
/// geodesic boundary, 3/2 for a cusp, cos(theta/6) + 1/2 for a cone point.
SystoleBound torus_systole_bound(const BoundarySpec& boundary);

/// Trace-systole bound for the four-punctured sphere with non-negative
/// boundary traces: the largest positive root of
/// X^3 - 3X^2 - (sum of pairwise products) X + (4 - sum of squares - abcd).
/// Degenerate (double root 2) exactly at vanishing boundary traces.
PositiveBound tys_sphere(double a, double b, double c, double d);

/// Trace systole of the non-orientable genus-3 surface: sqrt(3 + sqrt(17)),
/// realized by one-sided curves of the extremal character.
double tys_n3();

/// Per-character one-sided bound: runs the minimum search on the induced
/// (0, 0, 0, d^2) map and converts the smallest region value phi(X) back to
/// a curve trace 2 phi(X)/d, reported as cosh(sys) <= 1 + |trace|^2 / 2.
/// Requires a variety point with d != 0.
SystoleBound n3_one_sided_bound(const std::array<std::complex<double>, 4>& chi,
                                int radius = 8);

/// Systole bound for quasi-Fuchsian four-punctured spheres:
/// sys <= 2 acosh(7/2).
SystoleBound qf_sphere_bound();

/// The non-Fuchsian torus dichotomy for real characters with commutator
/// trace k > 2: for k < 18 an elliptic element is guaranteed; for k >= 18
/// some simple curve has trace modulus at most 2 cosh(l/6) - 1 where
/// l = 2 acosh(k/2).
struct NonFuchsianTorusReport {
  double k = 0.0;
  bool elliptic_guaranteed = false;
  double boundary_length = 0.0;  // 2 acosh(k/2)
  double trace_bound = 0.0;      // 2 cosh(l/6) - 1 (k >= 18 regime)
  bool descent_ran = false;
  bool small_region_fired = false;  // descent met a region of modulus < 2
};

NonFuchsianTorusReport nonfuchsian_torus_report(double k);

/// As above, additionally running the trace reduction on the real character
/// with base triple `base` and reporting which arm of the dichotomy fired.
NonFuchsianTorusReport nonfuchsian_torus_report(double k,
                                                const MarkoffTriple& base,
                                                int depth_cap = 10000);

}  // namespace markoff
