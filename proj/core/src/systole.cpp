#include "markoff/systole.hpp"

#include <cmath>
#include <stdexcept>

#include "markoff/charvar.hpp"

namespace markoff {

double trace_to_length(double t, CurveSide side) {
  if (side == CurveSide::TwoSided) {
    if (t < 2.0)
      throw std::domain_error("trace below 2 is elliptic, not a geodesic");
    return 2.0 * std::acosh(t / 2.0);
  }
  if (t < 0.0)
    throw std::domain_error("one-sided conversion expects a trace >= 0");
  return 2.0 * std::asinh(t / 2.0);
}

double tys_torus(std::complex<double> k) {
  if (std::abs(k - 2.0) <= 1e-12)
    throw std::domain_error("k = 2 is the reducible locus");
  return std::abs(dominant_root(k + 2.0));
}

SystoleBound torus_systole_bound(const BoundarySpec& boundary) {
  SystoleBound out;
  out.quantity = SystoleBound::Quantity::CoshHalfSys;
  switch (boundary.kind) {
    case BoundarySpec::Kind::GeodesicLength: {
      if (!(boundary.value > 0.0))
        throw std::domain_error("boundary length must be positive");
      out.value = std::cosh(boundary.value / 6.0) + 0.5;
      out.context = "geodesic boundary of length " +
                    std::to_string(boundary.value);
      return out;
    }
    case BoundarySpec::Kind::Cusp: {
      out.value = 1.5;
      out.context = "cusped boundary";
      return out;
    }
    default: {
      if (!(boundary.value > 0.0) || !(boundary.value < 2.0 * M_PI))
        throw std::domain_error("cone angle must lie in (0, 2*pi)");
      out.value = std::cos(boundary.value / 6.0) + 0.5;
      out.context = "cone point of angle " + std::to_string(boundary.value);
      return out;
    }
  }
}

PositiveBound tys_sphere(double a, double b, double c, double d) {
  if (a < 0.0 || b < 0.0 || c < 0.0 || d < 0.0)
    throw std::domain_error("boundary traces must be non-negative");
  MuParams mu = gt_map(a, b, c, d);
  double pairwise = a * b + a * c + a * d + b * c + b * d + c * d;
  double lsum = (mu.lambda1 + mu.lambda2 + mu.lambda3).real();
  if (std::abs(lsum - pairwise) > 1e-9 * std::max(1.0, pairwise))
    throw std::logic_error("trace quadruple map lost pairwise products");
  return positive_sink_bound(mu.lambda1.real(), mu.lambda2.real(),
                             mu.lambda3.real(), mu.s.real());
}

double tys_n3() { return std::sqrt(3.0 + std::sqrt(17.0)); }

SystoleBound n3_one_sided_bound(const std::array<std::complex<double>, 4>& chi,
                                int radius) {
  auto data = n3_to_markoff(chi[0], chi[1], chi[2], chi[3]);
  if (std::holds_alternative<N3DZeroBranch>(data))
    throw std::domain_error(
        "d = 0 characters induce no map; no one-sided bound");
  auto& [triple, mu] = std::get<std::pair<MarkoffTriple, MuParams>>(data);
  MarkoffMap map(mu, triple);
  auto [slope, value] = min_region_search(map, radius);
  std::complex<double> curve_trace = 2.0 * value / chi[3];
  SystoleBound out;
  out.quantity = SystoleBound::Quantity::CoshSys;
  out.value = 1.0 + std::norm(curve_trace) / 2.0;
  out.context = "one-sided curve at slope " + to_string(slope) +
                " with |trace| = " + std::to_string(std::abs(curve_trace));
  return out;
}

SystoleBound qf_sphere_bound() {
  SystoleBound out;
  out.quantity = SystoleBound::Quantity::Length;
  out.value = 2.0 * std::acosh(3.5);
  out.context = "quasi-Fuchsian four-punctured sphere";
  return out;
}

NonFuchsianTorusReport nonfuchsian_torus_report(double k) {
  if (!(k > 2.0))
    throw std::domain_error("the dichotomy applies to real k > 2");
  NonFuchsianTorusReport out;
  out.k = k;
  out.boundary_length = 2.0 * std::acosh(k / 2.0);
  if (k < 18.0) {
    out.elliptic_guaranteed = true;
  } else {
    out.trace_bound = 2.0 * std::cosh(out.boundary_length / 6.0) - 1.0;
  }
  return out;
}

NonFuchsianTorusReport nonfuchsian_torus_report(double k,
                                                const MarkoffTriple& base,
                                                int depth_cap) {
  NonFuchsianTorusReport out = nonfuchsian_torus_report(k);
  MarkoffMap map(torus_mu(k), base);
  ReductionOutcome descent = trace_reduce(map, base_triangle(), depth_cap);
  out.descent_ran = true;
  out.small_region_fired =
      descent.kind == ReductionOutcome::Kind::SmallRegion;
  return out;
}

}  // namespace markoff
