#pragma once

/**
 * @file cubic.hpp
 * @brief Root machinery for the cubics X^3 - 3X^2 + a, their reciprocals
 *        -aX^3 + 3X - 1, and the shifted family X^3 - 3X^2 - LX + s whose
 *        largest positive root bounds positive sinks.
 */

#include <array>
#include <complex>
#include <vector>

namespace markoff {

using Complex = std::complex<double>;

/// Roots of a monic cubic, sorted by (modulus desc, real part desc,
/// imaginary part desc).  residuals[i] = |P(roots[i])|; each stays below
/// 1e-10 * max(1, |root|^3).
struct CubicRoots {
  std::array<Complex, 3> roots;
  std::array<double, 3> residuals;
  bool has_multiple_root = false;
};

/// Solves X^3 + c2 X^2 + c1 X + c0 = 0 over the complex numbers.
/// Closed form plus Newton polish; near-coincident roots are snapped to the
/// critical point of P when P vanishes there, so exact double roots come out
/// exact.
CubicRoots solve_monic_cubic(Complex c2, Complex c1, Complex c0);

/// Dominant root t_a of X^3 - 3X^2 + a: maximal modulus, ties broken toward
/// larger real part, then positive imaginary part.
Complex dominant_root(Complex a);

/// Smallest-modulus root of -aX^3 + 3X - 1; degenerates to the linear root
/// 1/3 at a = 0.  Satisfies tau(a) * dominant_root(a) = 1 for a != 0.
Complex tau(Complex a);

/// Largest-modulus real root of X^3 - 3X^2 + mu (ties toward the positive
/// one).
double largest_real_root(double mu);

/// The five regimes of the real root set of X^3 - 3X^2 + mu.
/// The discriminant is 27*mu*(4 - mu).
enum class RealRootRegime {
  UniqueAboveThree,      // mu < 0: one real root, > 3
  DoubleZeroAndThree,    // mu = 0: roots 0 (double) and 3
  ThreeRealSplit,        // 0 < mu < 4: one root in (2,3), two in (-2,2)
  DoubleTwoAndMinusOne,  // mu = 4: roots 2 (double) and -1
  UniqueNegative         // mu > 4: one real root, < 0; |root| < 2 iff mu < 20
};

/// Real roots listed with multiplicity, largest first.
struct RealRootClassification {
  RealRootRegime regime;
  std::vector<double> roots;
};

RealRootClassification classify_real_roots(double mu);

/// Largest positive real root of X^3 - 3X^2 - (l1+l2+l3)X + s on the
/// parameter domain l_i >= 0, s <= 4.  Always exceeds 2 except at the
/// degenerate corner l = 0, s = 4 where the root is the double root 2.
struct PositiveBound {
  double value = 0.0;
  bool degenerate = false;
};

/// Throws std::domain_error when (l1, l2, l3, s) leaves the domain.
PositiveBound positive_sink_bound(double l1, double l2, double l3, double s);

}  // namespace markoff
