#include "markoff/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace markoff {

namespace {

Complex eval(Complex c2, Complex c1, Complex c0, Complex x) {
  return ((x + c2) * x + c1) * x + c0;
}

Complex deriv(Complex c2, Complex c1, Complex x) {
  return (3.0 * x + 2.0 * c2) * x + c1;
}

Complex newton_polish(Complex c2, Complex c1, Complex c0, Complex x) {
  Complex best = x;
  double best_res = std::abs(eval(c2, c1, c0, x));
  int stall = 0;
  for (int it = 0; it < 48 && stall < 3; ++it) {
    Complex d = deriv(c2, c1, x);
    if (std::abs(d) == 0.0) break;
    x -= eval(c2, c1, c0, x) / d;
    double res = std::abs(eval(c2, c1, c0, x));
    if (res < best_res) {
      best = x;
      best_res = res;
      stall = 0;
    } else {
      ++stall;
    }
  }
  return best;
}

// Descending (modulus, real part, imaginary part) with relative tie bands.
bool root_precedes(Complex x, Complex y) {
  double mx = std::abs(x), my = std::abs(y);
  double scale = std::max({1.0, mx, my});
  if (std::abs(mx - my) > 1e-12 * scale) return mx > my;
  if (std::abs(x.real() - y.real()) > 1e-12 * scale) return x.real() > y.real();
  return x.imag() > y.imag();
}

}  // namespace

CubicRoots solve_monic_cubic(Complex c2, Complex c1, Complex c0) {
  // Depressed form: X = Y - c2/3 gives Y^3 + pY + q.
  Complex shift = c2 / 3.0;
  Complex p = c1 - c2 * c2 / 3.0;
  Complex q = (2.0 / 27.0) * c2 * c2 * c2 - c2 * c1 / 3.0 + c0;
  Complex disc = q * q / 4.0 + p * p * p / 27.0;
  Complex sq = std::sqrt(disc);
  Complex u3 = -q / 2.0 + sq;
  Complex v3 = -q / 2.0 - sq;
  if (std::abs(v3) > std::abs(u3)) std::swap(u3, v3);
  std::array<Complex, 3> ys;
  if (std::abs(u3) == 0.0) {
    ys = {Complex(0), Complex(0), Complex(0)};  // triple root of depressed form
  } else {
    Complex u = std::pow(u3, 1.0 / 3.0);
    Complex v = -p / (3.0 * u);
    const Complex w(-0.5, std::sqrt(3.0) / 2.0);
    const Complex wc = std::conj(w);
    ys = {u + v, u * w + v * wc, u * wc + v * w};
  }
  std::array<Complex, 3> xs;
  for (int i = 0; i < 3; ++i) xs[i] = newton_polish(c2, c1, c0, ys[i] - shift);

  // Snap clustered roots onto critical points where P genuinely vanishes:
  // exact multiple roots then come out exact instead of sqrt(eps)-smeared.
  bool multiple = false;
  double scale =
      std::max({1.0, std::abs(xs[0]), std::abs(xs[1]), std::abs(xs[2])});
  auto near = [&](Complex a, Complex b) {
    return std::abs(a - b) <= 1e-6 * scale;
  };
  if (near(xs[0], xs[1]) && near(xs[1], xs[2]) && near(xs[0], xs[2])) {
    Complex r = -shift;
    double rs = std::max(1.0, std::abs(r));
    if (std::abs(eval(c2, c1, c0, r)) <= 1e-11 * rs * rs * rs) {
      xs = {r, r, r};
      multiple = true;
    }
  } else {
    for (int i = 0; i < 3 && !multiple; ++i)
      for (int j = i + 1; j < 3 && !multiple; ++j)
        if (near(xs[i], xs[j])) {
          Complex mid = (xs[i] + xs[j]) / 2.0;
          Complex cs = std::sqrt(c2 * c2 - 3.0 * c1);
          Complex r1 = (-c2 + cs) / 3.0;
          Complex r2 = (-c2 - cs) / 3.0;
          Complex r = std::abs(r1 - mid) <= std::abs(r2 - mid) ? r1 : r2;
          double rs = std::max(1.0, std::abs(r));
          if (std::abs(eval(c2, c1, c0, r)) <= 1e-11 * rs * rs * rs) {
            xs[i] = r;
            xs[j] = r;
            xs[3 - i - j] = -c2 - 2.0 * r;  // Vieta, exact third root
            multiple = true;
          }
        }
  }

  std::sort(xs.begin(), xs.end(), root_precedes);
  CubicRoots out;
  out.roots = xs;
  out.has_multiple_root = multiple;
  for (int i = 0; i < 3; ++i)
    out.residuals[i] = std::abs(eval(c2, c1, c0, xs[i]));
  return out;
}

Complex dominant_root(Complex a) {
  return solve_monic_cubic(Complex(-3.0), Complex(0.0), a).roots[0];
}

Complex tau(Complex a) {
  if (a == Complex(0.0)) return Complex(1.0 / 3.0);
  auto f = [&](Complex x) { return -a * x * x * x + 3.0 * x - 1.0; };
  auto fp = [&](Complex x) { return -3.0 * a * x * x + 3.0; };
  Complex x;
  if (std::abs(a) < 1e-3) {
    // The two remaining roots sit near +-sqrt(3/a); the small root is an
    // uncontested Newton target from the linear value 1/3.
    x = Complex(1.0 / 3.0);
  } else {
    CubicRoots r = solve_monic_cubic(Complex(0.0), -3.0 / a, 1.0 / a);
    x = r.roots[2];  // smallest modulus
  }
  Complex best = x;
  double best_res = std::abs(f(x));
  int stall = 0;
  for (int it = 0; it < 48 && stall < 3; ++it) {
    Complex d = fp(x);
    if (std::abs(d) == 0.0) break;
    x -= f(x) / d;
    double res = std::abs(f(x));
    if (res < best_res) {
      best = x;
      best_res = res;
      stall = 0;
    } else {
      ++stall;
    }
  }
  return best;
}

RealRootClassification classify_real_roots(double mu) {
  RealRootClassification out;
  if (mu == 0.0) {
    out.regime = RealRootRegime::DoubleZeroAndThree;
    out.roots = {3.0, 0.0, 0.0};
    return out;
  }
  if (mu == 4.0) {
    out.regime = RealRootRegime::DoubleTwoAndMinusOne;
    out.roots = {2.0, 2.0, -1.0};
    return out;
  }
  auto real_newton = [&](double x) {
    for (int it = 0; it < 64; ++it) {
      double fx = ((x - 3.0) * x) * x + mu;
      double dx = (3.0 * x - 6.0) * x;
      if (dx == 0.0) break;
      double step = fx / dx;
      x -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    return x;
  };
  if (mu > 0.0 && mu < 4.0) {
    // Three real roots via the trigonometric form of the depressed cubic
    // Y^3 - 3Y + (mu - 2), X = Y + 1.
    double phi = std::acos(std::clamp((2.0 - mu) / 2.0, -1.0, 1.0));
    out.regime = RealRootRegime::ThreeRealSplit;
    for (int k = 0; k < 3; ++k) {
      double y = 2.0 * std::cos((phi + 2.0 * M_PI * k) / 3.0);
      out.roots.push_back(real_newton(1.0 + y));
    }
    std::sort(out.roots.rbegin(), out.roots.rend());
    return out;
  }
  // One real root: mu < 0 gives it above 3, mu > 4 below 0.  Start Newton
  // beyond the outer critical point so the iteration cannot cross it.
  double root;
  if (mu < 0.0) {
    out.regime = RealRootRegime::UniqueAboveThree;
    root = real_newton(3.0 + std::cbrt(-mu));
  } else {
    out.regime = RealRootRegime::UniqueNegative;
    root = real_newton(-std::cbrt(mu));
  }
  out.roots = {root};
  return out;
}

double largest_real_root(double mu) {
  RealRootClassification c = classify_real_roots(mu);
  double best = c.roots.front();
  for (double r : c.roots) {
    double d = std::abs(r) - std::abs(best);
    if (d > 0.0 || (std::abs(d) <= 1e-12 * std::max(1.0, std::abs(r)) &&
                    r > best))
      best = r;
  }
  return best;
}

PositiveBound positive_sink_bound(double l1, double l2, double l3, double s) {
  if (l1 < 0.0 || l2 < 0.0 || l3 < 0.0)
    throw std::domain_error("positive sink bound needs l1, l2, l3 >= 0");
  if (s > 4.0) throw std::domain_error("positive sink bound needs s <= 4");
  double L = l1 + l2 + l3;
  if (L == 0.0 && s == 4.0) {
    // P factors as (X - 2)^2 (X + 1): the bound collapses onto the double
    // root.
    return PositiveBound{2.0, true};
  }
  // P(2) = s - 4 - 2L < 0 and P is increasing past its right critical point,
  // so there is exactly one root above 2.
  auto P = [&](double x) { return ((x - 3.0) * x - L) * x + s; };
  auto dP = [&](double x) { return (3.0 * x - 6.0) * x - L; };
  double x = 2.0 + std::sqrt(1.0 + L) + std::cbrt(std::max(0.0, -s) + 1.0);
  while (P(x) < 0.0) x *= 2.0;  // bracket from the right
  for (int it = 0; it < 64; ++it) {
    double step = P(x) / dP(x);
    x -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
  }
  return PositiveBound{x, false};
}

}  // namespace markoff
