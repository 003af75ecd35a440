#pragma once

/**
 * @file verify.hpp
 * @brief Sampling verifiers for the sink-constant bounds: the complex
 *        optimization domain behind the dominant-root constant, the real
 *        grid scan, the positive case, the shifted map on the parabolic
 *        four-holed-sphere variety, and the genus-2 corner inequalities.
 *
 * Every verifier is deterministic: the sample budget is split into fixed
 * chunks, each chunk draws from an engine seeded by chunk index, and
 * results merge by margin with (chunk, index) tie-breaks, so the outcome
 * is byte-identical for a given seed no matter how many workers run.
 */

#include <array>
#include <complex>
#include <cstdint>
#include <string>

#include "markoff/markoff_map.hpp"

namespace markoff {

/// Outcome of one verification run.  `worst_margin` is the smallest slack
/// observed over all retained samples, oriented so that nonnegative means
/// the claimed bound held with room; the run passes when it stays above
/// -tolerance.  `witness` replays to the reported margin.
struct VerificationReport {
  std::string theorem;    // tag of the statement checked
  std::uint64_t samples = 0;
  std::uint64_t kept = 0;  // samples that landed in the constraint set
  double worst_margin = 0.0;
  double tolerance = 0.0;
  std::array<std::complex<double>, 3> witness{};
  bool passed = false;
  std::uint64_t seed = 0;
  std::string details;
};

/// Samples the constraint set
///   |p| >= |q| >= |r|, Re(p), Re(q), Re(r) <= 1/2, p + q + r - 1 = m p q r
/// (r solved from the constraint) and checks |pq| >= |tau(m)|^2 - 1e-6.
/// A deterministic local refinement then walks the best samples toward the
/// minimizer, so the witness lands near (tau, tau, tau).  m = 4 is the
/// degenerate parameter and is rejected.
VerificationReport verify_complex_sink_constant(std::complex<double> m,
                                                std::uint64_t n_samples,
                                                std::uint64_t seed,
                                                int workers = 1);

/// Grid-scans real triples with x, y in [-extent, extent], z solved from the
/// vertex equation (both branches), keeps those in the sink domain
///   x/(yz) <= 1/2, y/(xz) <= 1/2, z/(xy) <= 1/2,
/// and checks min(|x|,|y|,|z|) <= max(|t'_mu|, 2) + 1e-8 where t'_mu is the
/// largest-modulus real root of X^3 - 3X^2 + mu.  The margin against the
/// dominant complex root is reported in `details` alongside.
VerificationReport verify_real_sink(double mu, double grid_extent = 8.0,
                                    int grid_steps = 160);

/// Samples positive triples (coordinates >= 2, z solved from the vertex
/// equation) in the positive sink set x_j x_k - 2 x_i - lambda_i >= 0 and
/// checks min(x1,x2,x3) <= positive_sink_bound + 1e-8.  Requires real mu
/// with lambda_i >= 0 and s <= 4.
VerificationReport verify_positive_sink(const MuParams& mu,
                                        std::uint64_t n_samples,
                                        std::uint64_t seed, int workers = 1);

/// The shift x -> x + 2 that turns a triple on the (8,8,8,-28) variety into
/// one satisfying (x+y+z)^2 = xyz.  Throws std::domain_error off-variety.
MarkoffTriple hat_transform(const MarkoffTriple& t);

/// Samples triples on (x+y+z)^2 = xyz, keeps those where no shifted edge
/// move x_i -> x_j x_k - 2(x_j + x_k) - x_i shrinks in modulus, and checks
/// min(|x|,|y|,|z|) <= 9 + 1e-8.  Also cross-checks the shifted edge
/// relation (x+y+z)/(xy) + (x+y+z')/(xy) = 1 on every sampled edge.
VerificationReport verify_hat_lemma(std::uint64_t n_samples,
                                    std::uint64_t seed, int workers = 1);

/// Which side of the z^2 = 2*lambda + (a^2 - d^2) split the corner probe
/// takes; Both runs the two cases at z^2 offset by +-1e-3*lambda.
enum class CornerCase { SteepBranch, ShallowBranch, Both };

/// Scans (a, d) with 2 < a < d <= 5 on an a_steps x d_steps grid.  At each
/// pair, with lambda = max(a^3 - 3a^2 + 2, d^3 + 3d^2 - 2), evaluates
///   f(x, y) = x^2 + y^2 + z^2 + xyz - (a^2 - d^2) x - (a^2 - 2)(d^2 - 2)
/// at the corner (-lambda, max(z, (2*lambda + a^2 - d^2)/z)) and requires
/// f < 0, and requires f > 8 on deterministic samples of the branch with
/// x >= lambda, y, z >= 2, yz > a^2.
VerificationReport genus2_corner_check(int a_steps, int d_steps,
                                       CornerCase z_policy = CornerCase::Both);

}  // namespace markoff
