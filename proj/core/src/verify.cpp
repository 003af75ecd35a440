#include "markoff/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "markoff/cubic.hpp"
#include "sampling.hpp"

namespace markoff {

namespace {

using Cx = std::complex<double>;
using detail::disk_sample;
using detail::splitmix64;
using detail::unit_double;

constexpr std::uint64_t kChunk = 4096;

// Running minimum with a total order on (margin, chunk, index) so merges are
// independent of worker count and merge order.
struct Best {
  double margin = std::numeric_limits<double>::infinity();
  std::uint64_t chunk = ~0ull;
  std::uint64_t index = ~0ull;
  std::array<Cx, 3> witness{};

  void consider(double m, std::uint64_t c, std::uint64_t i,
                const std::array<Cx, 3>& w) {
    if (m < margin || (m == margin && (c < chunk || (c == chunk && i < index)))) {
      margin = m;
      chunk = c;
      index = i;
      witness = w;
    }
  }
  void merge(const Best& o) { consider(o.margin, o.chunk, o.index, o.witness); }
};

// The k smallest margins under the same total order, kept sorted; seeds for
// multi-start refinement.  (chunk, index) pairs are unique, so merges stay
// independent of worker count.
struct BestK {
  static constexpr int kSeeds = 8;
  struct Entry {
    double margin = std::numeric_limits<double>::infinity();
    std::uint64_t chunk = ~0ull;
    std::uint64_t index = ~0ull;
    std::array<Cx, 3> witness{};
  };
  std::array<Entry, kSeeds> entry{};
  int size = 0;

  static bool before(const Entry& a, const Entry& b) {
    if (a.margin != b.margin) return a.margin < b.margin;
    if (a.chunk != b.chunk) return a.chunk < b.chunk;
    return a.index < b.index;
  }
  void consider(double m, std::uint64_t c, std::uint64_t i,
                const std::array<Cx, 3>& w) {
    Entry cand{m, c, i, w};
    if (size < kSeeds) {
      entry[size++] = cand;
    } else if (before(cand, entry[kSeeds - 1])) {
      entry[kSeeds - 1] = cand;
    } else {
      return;
    }
    for (int j = size - 1; j > 0 && before(entry[j], entry[j - 1]); --j)
      std::swap(entry[j], entry[j - 1]);
  }
  void merge(const BestK& o) {
    for (int j = 0; j < o.size; ++j)
      consider(o.entry[j].margin, o.entry[j].chunk, o.entry[j].index,
               o.entry[j].witness);
  }
};

// Splits `total` samples into fixed chunks, each with its own engine seeded
// from (seed, chunk), and fans chunks across workers.  Accum needs merge().
template <class Accum, class Body>
Accum run_chunks(std::uint64_t total, std::uint64_t seed, int workers,
                 Body body) {
  std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  auto run_range = [&](Accum& acc, std::uint64_t first, std::uint64_t stride) {
    for (std::uint64_t c = first; c < chunks; c += stride) {
      std::uint64_t count = std::min<std::uint64_t>(kChunk, total - c * kChunk);
      std::mt19937_64 eng(splitmix64(seed + c));
      body(acc, c, count, eng);
    }
  };
  int w = std::clamp<int>(workers, 1, 64);
  if (w == 1 || chunks < 2) {
    Accum acc;
    run_range(acc, 0, 1);
    return acc;
  }
  std::vector<Accum> parts(static_cast<std::size_t>(w));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(w));
  for (int t = 0; t < w; ++t)
    pool.emplace_back([&, t] {
      run_range(parts[static_cast<std::size_t>(t)],
                static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(w));
    });
  for (auto& th : pool) th.join();
  Accum acc;
  for (const Accum& p : parts) acc.merge(p);
  return acc;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void finish_report(VerificationReport& out, const Best& best, double tol) {
  out.tolerance = tol;
  if (out.kept == 0) {
    out.worst_margin = 0.0;
    out.passed = false;
    out.details += "; no samples landed in the constraint set";
    return;
  }
  out.worst_margin = best.margin;
  out.witness = best.witness;
  out.passed = best.margin >= -tol;
}

}  // namespace

VerificationReport verify_complex_sink_constant(Cx m, std::uint64_t n_samples,
                                                std::uint64_t seed,
                                                int workers) {
  if (std::abs(m - 4.0) <= 1e-12)
    throw std::domain_error(
        "m = 4 is degenerate: the constraint surface pinches at tau = 1/2");
  if (n_samples < 1) throw std::invalid_argument("need at least one sample");

  const Cx tau_m = tau(m);
  const double target = std::norm(tau_m);
  const double radius = 3.0 * std::abs(tau_m);

  // Returns the margin |pq| - |tau|^2 and the solved r, or rejects when
  // (p, q, r) leaves the constraint set.  p, q may arrive unordered.
  auto probe = [&](Cx& p, Cx& q, Cx& r, double& margin) -> bool {
    if (std::abs(p) < std::abs(q)) std::swap(p, q);
    Cx den = 1.0 - m * p * q;
    if (std::abs(den) < 1e-13) return false;
    r = (1.0 - p - q) / den;
    if (std::abs(q) < std::abs(r)) return false;
    if (r.real() > 0.5) return false;
    margin = std::abs(p * q) - target;
    return true;
  };

  auto half_disk = [&](std::mt19937_64& eng) {
    for (;;) {
      Cx w = disk_sample(eng, radius);
      if (w.real() <= 0.5) return w;
    }
  };

  struct Accum {
    BestK best;
    std::uint64_t kept = 0;
    void merge(const Accum& o) {
      best.merge(o.best);
      kept += o.kept;
    }
  };

  Accum acc = run_chunks<Accum>(
      n_samples, seed, workers,
      [&](Accum& a, std::uint64_t chunk, std::uint64_t count,
          std::mt19937_64& eng) {
        for (std::uint64_t i = 0; i < count; ++i) {
          Cx p = half_disk(eng);
          Cx q;
          if (i % 2 == 1) {
            // Correlated stratum: near-coincident pairs.  The constraint
            // set is permutation symmetric, so extremal structure tends to
            // sit near the diagonal, which independent draws rarely hit.
            do {
              q = p + disk_sample(eng, 0.03 * radius);
            } while (q.real() > 0.5);
          } else {
            q = half_disk(eng);
          }
          Cx r;
          double margin;
          if (!probe(p, q, r, margin)) continue;
          ++a.kept;
          a.best.consider(margin, chunk, i, {p, q, r});
        }
      });

  // Deterministic multi-start refinement from the best samples.  The
  // constraint set is permutation symmetric, so contractions toward the
  // centroid are natural moves; random perturbations with a radius that
  // shrinks on stalls handle the rest.  Runs after the merge on one
  // thread, so the result stays worker-count independent.
  Best champion;
  bool refined = false;
  if (acc.kept > 0) {
    for (int s0 = 0; s0 < acc.best.size; ++s0) {
      const BestK::Entry& e = acc.best.entry[s0];
      champion.consider(e.margin, e.chunk, e.index, e.witness);
    }
    const double raw_margin = champion.margin;
    for (int s0 = 0; s0 < acc.best.size; ++s0) {
      const BestK::Entry& e = acc.best.entry[s0];
      std::mt19937_64 reng(splitmix64((seed ^ 0x9e3779b97f4a7c15ull) +
                                      static_cast<std::uint64_t>(s0)));
      Cx p = e.witness[0], q = e.witness[1], r = e.witness[2];
      std::array<Cx, 3> w = e.witness;
      double val = e.margin;
      double rho = 0.25 * std::abs(tau_m);
      auto try_candidate = [&](Cx pp, Cx qq) {
        if (pp.real() > 0.5 || qq.real() > 0.5) return false;
        if (std::abs(pp) > radius || std::abs(qq) > radius) return false;
        Cx rr;
        double mg;
        if (!probe(pp, qq, rr, mg)) return false;
        if (mg >= val) return false;
        val = mg;
        p = pp;
        q = qq;
        r = rr;
        w = {pp, qq, rr};
        return true;
      };
      for (int iter = 0; iter < 400 && rho > 5e-15; ++iter) {
        bool improved = false;
        Cx c = (p + q + r) / 3.0;
        for (double t : {1.0, 0.5, 0.25})
          improved |= try_candidate(p + t * (c - p), q + t * (c - q));
        for (int j = 0; j < 32; ++j)
          improved |= try_candidate(p + disk_sample(reng, rho),
                                    q + disk_sample(reng, rho));
        if (!improved) rho *= 0.5;
      }
      champion.consider(val, e.chunk, e.index, w);
    }
    refined = champion.margin < raw_margin;
  }

  VerificationReport out;
  out.theorem = "complex-sink-constant";
  out.samples = n_samples;
  out.kept = acc.kept;
  out.seed = seed;
  out.details = "target |tau|^2 = " + format_double(target) +
                (refined ? "; witness refined" : "");
  finish_report(out, champion, 1e-6);
  return out;
}

VerificationReport verify_real_sink(double mu, double grid_extent,
                                    int grid_steps) {
  if (std::abs(mu - 4.0) <= 1e-12)
    throw std::domain_error("mu = 4 is degenerate for the real sink bound");
  if (!(grid_extent > 0.0) || grid_steps < 1)
    throw std::invalid_argument("grid extent and step count must be positive");

  const double t_real = largest_real_root(mu);
  const double bound = std::max(std::abs(t_real), 2.0);
  const double t_dom = std::abs(dominant_root(Cx(mu)));

  Best best;       // against max(|t'|, 2), the claim under test
  Best best_dom;   // against |t_mu|, reported alongside
  std::uint64_t kept = 0, probes = 0;

  for (int i = 0; i <= grid_steps; ++i) {
    double x = -grid_extent + 2.0 * grid_extent * i / grid_steps;
    for (int j = 0; j <= grid_steps; ++j) {
      double y = -grid_extent + 2.0 * grid_extent * j / grid_steps;
      // z^2 - xy z + (x^2 + y^2 - mu) = 0
      double disc = 0.25 * x * x * y * y - (x * x + y * y - mu);
      probes += 2;
      if (disc < 0.0) continue;
      double sq = std::sqrt(disc);
      int branch = 0;
      for (double z : {0.5 * x * y + sq, 0.5 * x * y - sq}) {
        std::uint64_t index =
            2 * static_cast<std::uint64_t>(j) + static_cast<std::uint64_t>(branch++);
        if (std::abs(x) < 1e-12 || std::abs(y) < 1e-12 || std::abs(z) < 1e-12)
          continue;
        if (x / (y * z) > 0.5 || y / (x * z) > 0.5 || z / (x * y) > 0.5)
          continue;
        ++kept;
        double mn = std::min({std::abs(x), std::abs(y), std::abs(z)});
        std::array<Cx, 3> w{x, y, z};
        best.consider(bound - mn, static_cast<std::uint64_t>(i), index, w);
        best_dom.consider(t_dom - mn, static_cast<std::uint64_t>(i), index, w);
      }
    }
  }

  VerificationReport out;
  out.theorem = "real-sink-bound";
  out.samples = probes;
  out.kept = kept;
  out.seed = 0;
  out.details = "real-root bound " + format_double(bound) +
                "; dominant-root bound " + format_double(t_dom) +
                " with margin " +
                format_double(kept ? best_dom.margin : 0.0);
  finish_report(out, best, 1e-8);
  return out;
}

VerificationReport verify_positive_sink(const MuParams& mu,
                                        std::uint64_t n_samples,
                                        std::uint64_t seed, int workers) {
  for (Cx v : {mu.lambda1, mu.lambda2, mu.lambda3, mu.s})
    if (std::abs(v.imag()) > 1e-12)
      throw std::domain_error("positive sink bound needs real parameters");
  const double l1 = mu.lambda1.real(), l2 = mu.lambda2.real(),
               l3 = mu.lambda3.real(), s = mu.s.real();
  if (l1 < 0.0 || l2 < 0.0 || l3 < 0.0 || s > 4.0)
    throw std::domain_error(
        "parameters must lie in [0,inf)^3 x (-inf,4]");
  if (n_samples < 1) throw std::invalid_argument("need at least one sample");

  const PositiveBound pb = positive_sink_bound(l1, l2, l3, s);
  const double hi = pb.value + 6.0;

  struct Accum {
    Best best;
    std::uint64_t kept = 0;
    void merge(const Accum& o) {
      best.merge(o.best);
      kept += o.kept;
    }
  };

  Accum acc = run_chunks<Accum>(
      n_samples, seed, workers,
      [&](Accum& a, std::uint64_t chunk, std::uint64_t count,
          std::mt19937_64& eng) {
        for (std::uint64_t i = 0; i < count; ++i) {
          double x = 2.0 + (hi - 2.0) * unit_double(eng);
          double y = 2.0 + (hi - 2.0) * unit_double(eng);
          // z^2 + (l3 - xy) z + (x^2 + y^2 + l1 x + l2 y - s) = 0
          double half_b = 0.5 * (l3 - x * y);
          double disc = half_b * half_b - (x * x + y * y + l1 * x + l2 * y - s);
          if (disc < 0.0) continue;
          double sq = std::sqrt(disc);
          for (double z : {-half_b + sq, -half_b - sq}) {
            if (z < 2.0) continue;
            if (y * z - 2.0 * x - l1 < 0.0) continue;
            if (x * z - 2.0 * y - l2 < 0.0) continue;
            if (x * y - 2.0 * z - l3 < 0.0) continue;
            ++a.kept;
            a.best.consider(pb.value - std::min({x, y, z}), chunk, i,
                            {x, y, z});
          }
        }
      });

  VerificationReport out;
  out.theorem = "positive-sink-bound";
  out.samples = n_samples;
  out.kept = acc.kept;
  out.seed = seed;
  out.details = "bound " + format_double(pb.value) +
                (pb.degenerate ? " (degenerate double root)" : "");
  finish_report(out, acc.best, 1e-8);
  return out;
}

MarkoffTriple hat_transform(const MarkoffTriple& t) {
  const MuParams mu{8.0, 8.0, 8.0, -28.0};
  double big =
      std::max({1.0, std::abs(t.x1), std::abs(t.x2), std::abs(t.x3)});
  if (std::abs(vertex_residual(t, mu)) > 1e-8 * big * big * big)
    throw std::domain_error("triple is not on the (8,8,8,-28) variety");
  return {t.x1 + 2.0, t.x2 + 2.0, t.x3 + 2.0};
}

VerificationReport verify_hat_lemma(std::uint64_t n_samples,
                                    std::uint64_t seed, int workers) {
  if (n_samples < 1) throw std::invalid_argument("need at least one sample");
  constexpr double radius = 15.0;

  // Shifted edge move: x -> yz - 2(y + z) - x keeps (x+y+z)^2 = xyz.
  auto shifted_move = [](Cx a, Cx b, Cx c) { return b * c - 2.0 * (b + c) - a; };

  struct Accum {
    Best best;
    std::uint64_t kept = 0;
    double max_dev = 0.0;  // worst shifted-edge-relation deviation
    void merge(const Accum& o) {
      best.merge(o.best);
      kept += o.kept;
      max_dev = std::max(max_dev, o.max_dev);
    }
  };

  Accum acc = run_chunks<Accum>(
      n_samples, seed, workers,
      [&](Accum& a, std::uint64_t chunk, std::uint64_t count,
          std::mt19937_64& eng) {
        for (std::uint64_t i = 0; i < count; ++i) {
          Cx hx = disk_sample(eng, radius);
          Cx hy = disk_sample(eng, radius);
          // (hx + hy + z)^2 = hx hy z, i.e.
          // z^2 + (2(hx + hy) - hx hy) z + (hx + hy)^2 = 0
          Cx b = 2.0 * (hx + hy) - hx * hy;
          Cx sum = hx + hy;
          Cx disc = std::sqrt(b * b - 4.0 * sum * sum);
          int branch = 0;
          for (Cx hz : {(-b + disc) / 2.0, (-b - disc) / 2.0}) {
            std::uint64_t index = 2 * i + static_cast<std::uint64_t>(branch++);
            Cx sigma = hx + hy + hz;
            if (std::abs(hx * hy) > 1e-8 && std::abs(sigma) > 1e-8) {
              Cx r1 = sigma / (hx * hy);
              Cx r2 = (hx + hy + shifted_move(hz, hx, hy)) / (hx * hy);
              double dev = std::abs(r1 + r2 - 1.0) /
                           std::max(1.0, std::abs(r1) + std::abs(r2));
              a.max_dev = std::max(a.max_dev, dev);
            }
            double m1 = std::abs(hx), m2 = std::abs(hy), m3 = std::abs(hz);
            double mn = std::min({m1, m2, m3});
            if (mn < 1e-9) continue;
            bool sink = true;
            const Cx vals[3] = {hx, hy, hz};
            for (int k = 0; k < 3 && sink; ++k) {
              Cx moved = shifted_move(vals[k], vals[(k + 1) % 3],
                                      vals[(k + 2) % 3]);
              double zi = std::abs(vals[k]), wi = std::abs(moved);
              if (zi > wi + 1e-12 * std::max({1.0, zi, wi})) sink = false;
            }
            if (!sink) continue;
            ++a.kept;
            a.best.consider(9.0 - mn, chunk, index, {hx, hy, hz});
          }
        }
      });

  VerificationReport out;
  out.theorem = "hat-sink-minimum";
  out.samples = n_samples;
  out.kept = acc.kept;
  out.seed = seed;
  out.details =
      "worst shifted-edge-relation deviation " + format_double(acc.max_dev);
  finish_report(out, acc.best, 1e-8);
  out.passed = out.passed && acc.max_dev <= 1e-9;
  return out;
}

VerificationReport genus2_corner_check(int a_steps, int d_steps,
                                       CornerCase z_policy) {
  if (a_steps < 1 || d_steps < 1)
    throw std::invalid_argument("grid steps must be positive");

  Best best;
  std::uint64_t probes = 0;
  std::string worst_kind;

  for (int ia = 0; ia < a_steps; ++ia) {
    double a = 2.0 + (ia + 1) * 3.0 / (a_steps + 1);
    for (int id = 0; id < d_steps; ++id) {
      double d = a + (id + 1) * (5.0 - a) / d_steps;
      double lam =
          std::max(a * a * a - 3.0 * a * a + 2.0, d * d * d + 3.0 * d * d - 2.0);
      double split = 2.0 * lam + (a * a - d * d);
      double delta = 1e-3 * lam;
      auto f = [&](double x, double y, double z) {
        return x * x + y * y + z * z + x * y * z - (a * a - d * d) * x -
               (a * a - 2.0) * (d * d - 2.0);
      };
      auto chunk = static_cast<std::uint64_t>(ia);
      std::uint64_t index = static_cast<std::uint64_t>(id) * 16;

      // Corner probes: f must be negative at (-lambda, max(z, split/z)).
      double old_margin = best.margin;
      if (z_policy != CornerCase::ShallowBranch) {
        double z = std::sqrt(split + delta);
        best.consider(-f(-lam, std::max(z, split / z), z), chunk, index,
                      {a, d, z});
        ++probes;
      }
      ++index;
      if (z_policy != CornerCase::SteepBranch) {
        double z = std::sqrt(split - delta);
        best.consider(-f(-lam, std::max(z, split / z), z), chunk, index,
                      {a, d, z});
        ++probes;
      }
      if (best.margin < old_margin) worst_kind = "corner";

      // Branch probes: f must exceed 8 when x >= lambda, y, z >= 2, yz > a^2.
      old_margin = best.margin;
      for (double u : {0.1, 1.0, 3.0})
        for (double v : {0.01, 0.5, 2.0}) {
          ++index;
          double x = lam + u;
          double yz = std::max(2.0, a) + v;
          best.consider(f(x, yz, yz) - 8.0, chunk, index, {a, d, x});
          ++probes;
        }
      if (best.margin < old_margin) worst_kind = "positive-branch";
    }
  }

  VerificationReport out;
  out.theorem = "genus2-corner-inequalities";
  out.samples = probes;
  out.kept = probes;
  out.seed = 0;
  out.details = "worst probe kind: " + (worst_kind.empty() ? "corner" : worst_kind);
  out.tolerance = 0.0;
  out.worst_margin = best.margin;
  out.witness = best.witness;
  out.passed = best.margin > 0.0;
  return out;
}

}  // namespace markoff
