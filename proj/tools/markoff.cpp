/**
 * @file markoff.cpp
 * @brief Command line front end: cubic roots, the boundary-trace map,
 *        Markoff map evaluation/descent/export, verification suites,
 *        systole bounds, and the matrix oracle.
 *
 * Identical argv and seed produce byte-identical output, independent of
 * worker count.  Exit codes: 0 success/verified, 1 verification failed
 * (report still emitted), 2 invalid input.
 */

#include <complex>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "markoff/charvar.hpp"
#include "markoff/cubic.hpp"
#include "markoff/farey.hpp"
#include "markoff/hp.hpp"
#include "markoff/markoff_map.hpp"
#include "markoff/serialize.hpp"
#include "markoff/slope.hpp"
#include "markoff/systole.hpp"
#include "markoff/verify.hpp"

namespace {

using nlohmann::json;

struct Config {
  std::uint64_t seed = 0;
  std::uint64_t samples = 100000;
  int depth_cap = 10000;
  int workers = 1;
  std::string precision = "double";
  std::string output = "text";
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::complex<double> cx(const std::string& text) {
  return markoff::parse_complex(text);
}

double real_arg(const std::string& text, const char* what) {
  std::complex<double> v = markoff::parse_complex(text);
  if (v.imag() != 0.0)
    throw std::invalid_argument(std::string(what) + " must be real");
  return v.real();
}

markoff::MuParams mu_from(const std::vector<std::string>& v) {
  return {cx(v[0]), cx(v[1]), cx(v[2]), cx(v[3])};
}

markoff::MarkoffTriple triple_from(const std::vector<std::string>& v) {
  return {cx(v[0]), cx(v[1]), cx(v[2])};
}

markoff::Triangle triangle_from(const std::string& text) {
  std::vector<std::string> parts(1);
  for (char c : text) {
    if (c == ',')
      parts.emplace_back();
    else
      parts.back().push_back(c);
  }
  if (parts.size() != 3)
    throw std::invalid_argument(
        "a triangle is three comma-separated slopes, e.g. inf,0/1,1/1");
  return markoff::make_triangle(markoff::parse_slope(parts[0]),
                                markoff::parse_slope(parts[1]),
                                markoff::parse_slope(parts[2]));
}

void emit(const Config& cfg, const json& payload,
          const std::vector<std::string>& text_lines) {
  if (cfg.output == "json") {
    std::cout << payload.dump(2) << "\n";
  } else {
    for (const std::string& line : text_lines) std::cout << line << "\n";
  }
}

std::string triple_text(const markoff::MarkoffTriple& t) {
  return "(" + markoff::format_complex(t.x1) + ", " +
         markoff::format_complex(t.x2) + ", " + markoff::format_complex(t.x3) +
         ")";
}

std::string triangle_text(const markoff::Triangle& t) {
  return markoff::to_string(t.regions[0]) + "," +
         markoff::to_string(t.regions[1]) + "," +
         markoff::to_string(t.regions[2]);
}

int report_result(const Config& cfg, const markoff::VerificationReport& r) {
  emit(cfg, markoff::to_json(r),
       {"theorem: " + r.theorem,
        "samples: " + std::to_string(r.samples),
        "kept: " + std::to_string(r.kept),
        "worst margin: " + fmt(r.worst_margin),
        "tolerance: " + fmt(r.tolerance),
        "witness: (" + markoff::format_complex(r.witness[0]) + ", " +
            markoff::format_complex(r.witness[1]) + ", " +
            markoff::format_complex(r.witness[2]) + ")",
        "seed: " + std::to_string(r.seed),
        "details: " + r.details,
        std::string("result: ") + (r.passed ? "PASSED" : "FAILED")});
  return r.passed ? 0 : 1;
}

int reduction_result(const Config& cfg, const markoff::ReductionOutcome& out) {
  using Kind = markoff::ReductionOutcome::Kind;
  const char* kind = out.kind == Kind::SinkFound       ? "sink-found"
                     : out.kind == Kind::SmallRegion   ? "small-region"
                                                       : "depth-exceeded";
  std::vector<std::string> lines = {
      std::string("kind: ") + kind,
      "steps: " + std::to_string(out.trace.size() - 1),
      "vertex: " + triangle_text(out.vertex),
      "triple: " + triple_text(out.triple),
  };
  if (out.kind == Kind::SmallRegion)
    lines.push_back("small region: " + markoff::to_string(out.region) + " = " +
                    markoff::format_complex(out.value));
  if (out.precision_loss) lines.push_back("precision loss: yes");
  emit(cfg, markoff::to_json(out), lines);
  return 0;
}

/// BFS ball of the dual tree around the base triangle, as a DOT digraph.
/// Node labels are newline-separated "slope=value" entries; each tree edge
/// follows its arrow, ties appear as a pair of opposite edges.
void emit_dot(markoff::MarkoffMap& map, int radius, std::ostream& os) {
  using markoff::Triangle;
  std::map<Triangle, std::size_t> ids;
  std::vector<Triangle> order{markoff::base_triangle()};
  std::vector<int> depth{0};
  ids.emplace(order[0], 0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    if (depth[head] >= radius) continue;
    const Triangle u = order[head];
    for (const markoff::NeighborStep& step : markoff::triangle_neighbors(u)) {
      if (ids.count(step.triangle)) continue;
      ids.emplace(step.triangle, order.size());
      order.push_back(step.triangle);
      depth.push_back(depth[head] + 1);
    }
  }
  os << "digraph markoff {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::string label;
    for (const markoff::Slope& r : order[i].regions) {
      if (!label.empty()) label += "\\n";
      label += markoff::to_string(r) + "=" +
               markoff::format_complex(map.region_value(r));
    }
    os << "  n" << i << " [label=\"" << label << "\"];\n";
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const markoff::NeighborStep& step :
         markoff::triangle_neighbors(order[i])) {
      auto it = ids.find(step.triangle);
      if (it == ids.end() || it->second <= i) continue;  // one visit per edge
      markoff::Orientation o = markoff::orient_edge(map, step.edge);
      bool i_is_first = markoff::edge_endpoint(step.edge, 0) == order[i];
      std::size_t toward_first_src = i_is_first ? it->second : i;
      std::size_t toward_first_dst = i_is_first ? i : it->second;
      if (o != markoff::Orientation::TowardSecond)
        os << "  n" << toward_first_src << " -> n" << toward_first_dst
           << ";\n";
      if (o != markoff::Orientation::TowardFirst)
        os << "  n" << toward_first_dst << " -> n" << toward_first_src
           << ";\n";
    }
  }
  os << "}\n";
}

std::string regime_name(markoff::RealRootRegime r) {
  switch (r) {
    case markoff::RealRootRegime::UniqueAboveThree:
      return "unique-above-three";
    case markoff::RealRootRegime::DoubleZeroAndThree:
      return "double-zero-and-three";
    case markoff::RealRootRegime::ThreeRealSplit:
      return "three-real-split";
    case markoff::RealRootRegime::DoubleTwoAndMinusOne:
      return "double-two-and-minus-one";
    default:
      return "unique-negative";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Generalized Markoff maps on the tree dual to the Farey "
      "triangulation: roots, descent, verification, systole bounds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "markoff 0.1.0");

  Config cfg;
  app.add_option("--seed", cfg.seed, "RNG seed, recorded in randomized output")
      ->capture_default_str();
  app.add_option("--samples", cfg.samples, "sample count for verification")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--depth-cap", cfg.depth_cap, "maximum descent depth")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--workers", cfg.workers,
                 "sampling threads; results do not depend on this")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  app.add_option("--precision", cfg.precision,
                 "double, or high for 50 significant digits")
      ->check(CLI::IsMember({"double", "high"}))
      ->capture_default_str();
  app.add_option("--output", cfg.output, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  int exit_code = 0;

  // ---- root ---------------------------------------------------------------
  auto* root_cmd =
      app.add_subcommand("root", "Roots of X^3 - 3X^2 + a and relatives");
  root_cmd->fallthrough();
  root_cmd->require_subcommand(1);

  std::string dom_a;
  auto* dom_cmd = root_cmd->add_subcommand(
      "dominant", "Dominant root t_a (maximal modulus)");
  dom_cmd->fallthrough();
  dom_cmd->add_option("a", dom_a, "parameter a, complex literal")->required();
  dom_cmd->callback([&] {
    std::complex<double> a = cx(dom_a);
    if (cfg.precision == "high") {
      std::string t = markoff::hp_dominant_root(a);
      emit(cfg,
           json{{"a", markoff::complex_json(a)},
                {"dominant_root", t},
                {"precision", "high"}},
           {"t = " + t});
    } else {
      std::complex<double> t = markoff::dominant_root(a);
      emit(cfg,
           json{{"a", markoff::complex_json(a)},
                {"dominant_root", markoff::complex_json(t)},
                {"modulus", std::abs(t)}},
           {"t = " + markoff::format_complex(t),
            "|t| = " + fmt(std::abs(t))});
    }
  });

  std::string real_a;
  auto* real_cmd = root_cmd->add_subcommand(
      "real", "Largest-modulus real root of X^3 - 3X^2 + mu");
  real_cmd->fallthrough();
  real_cmd->add_option("mu", real_a, "real parameter")->required();
  real_cmd->callback([&] {
    double mu = real_arg(real_a, "mu");
    double r = markoff::largest_real_root(mu);
    emit(cfg, json{{"mu", mu}, {"real_root", r}}, {"t' = " + fmt(r)});
  });

  std::string cls_a;
  auto* cls_cmd = root_cmd->add_subcommand(
      "classify", "Real root regime of X^3 - 3X^2 + mu");
  cls_cmd->fallthrough();
  cls_cmd->add_option("mu", cls_a, "real parameter")->required();
  cls_cmd->callback([&] {
    double mu = real_arg(cls_a, "mu");
    markoff::RealRootClassification c = markoff::classify_real_roots(mu);
    json roots = json::array();
    std::string listed;
    for (double r : c.roots) {
      roots.push_back(r);
      if (!listed.empty()) listed += ", ";
      listed += fmt(r);
    }
    emit(cfg,
         json{{"mu", mu}, {"regime", regime_name(c.regime)}, {"roots", roots}},
         {"regime: " + regime_name(c.regime), "real roots: " + listed});
  });

  // ---- gt -----------------------------------------------------------------
  std::vector<std::string> gt_args;
  auto* gt_cmd = app.add_subcommand(
      "gt", "Boundary traces (a,b,c,d) to the vertex parameters of the "
            "four-punctured sphere");
  gt_cmd->fallthrough();
  gt_cmd->add_option("traces", gt_args, "a b c d, complex literals")
      ->expected(4)
      ->required();
  gt_cmd->callback([&] {
    markoff::MuParams mu = markoff::gt_map(cx(gt_args[0]), cx(gt_args[1]),
                                           cx(gt_args[2]), cx(gt_args[3]));
    emit(cfg, markoff::to_json(mu),
         {"mu = (" + markoff::format_complex(mu.lambda1) + ", " +
          markoff::format_complex(mu.lambda2) + ", " +
          markoff::format_complex(mu.lambda3) + ", " +
          markoff::format_complex(mu.s) + ")"});
  });

  // ---- map ----------------------------------------------------------------
  auto* map_cmd =
      app.add_subcommand("map", "Markoff map evaluation, descent and export");
  map_cmd->fallthrough();
  map_cmd->require_subcommand(1);
  std::vector<std::string> mu_args{"0", "0", "0", "0"};
  std::vector<std::string> base_args{"3", "3", "3"};
  map_cmd->add_option("--mu", mu_args, "vertex parameters l1 l2 l3 s")
      ->expected(4)
      ->capture_default_str();
  map_cmd->add_option("--base", base_args, "base triple at (inf, 0, 1)")
      ->expected(3)
      ->capture_default_str();

  std::string slope_arg;
  auto* eval_cmd = map_cmd->add_subcommand("eval", "Region value at a slope");
  eval_cmd->fallthrough();
  eval_cmd->add_option("--slope", slope_arg, "slope p/q, or inf")->required();
  eval_cmd->callback([&] {
    markoff::MuParams mu = mu_from(mu_args);
    markoff::MarkoffTriple base = triple_from(base_args);
    markoff::Slope s = markoff::parse_slope(slope_arg);
    if (cfg.precision == "high") {
      std::string v = markoff::hp_region_value(mu, base, s);
      emit(cfg,
           json{{"slope", markoff::to_string(s)},
                {"value", v},
                {"precision", "high"}},
           {"phi(" + markoff::to_string(s) + ") = " + v});
    } else {
      markoff::MarkoffMap m(mu, base);
      std::complex<double> v = m.region_value(s);
      emit(cfg,
           json{{"slope", markoff::to_string(s)},
                {"value", markoff::complex_json(v)}},
           {"phi(" + markoff::to_string(s) +
            ") = " + markoff::format_complex(v)});
    }
  });

  std::string start_arg;
  auto* reduce_cmd = map_cmd->add_subcommand(
      "reduce", "Greedy descent along outgoing arrows");
  reduce_cmd->fallthrough();
  reduce_cmd->add_option("--start", start_arg,
                         "start triangle, three comma-separated slopes");
  reduce_cmd->callback([&] {
    markoff::MuParams mu = mu_from(mu_args);
    markoff::MarkoffTriple base = triple_from(base_args);
    markoff::Triangle start = start_arg.empty() ? markoff::base_triangle()
                                                : triangle_from(start_arg);
    markoff::ReductionOutcome out;
    if (cfg.precision == "high") {
      out = markoff::hp_trace_reduce(mu, base, start, cfg.depth_cap);
    } else {
      markoff::MarkoffMap m(mu, base);
      out = markoff::trace_reduce(m, start, cfg.depth_cap);
    }
    exit_code = reduction_result(cfg, out);
  });

  int dot_radius = 3;
  auto* dot_cmd = map_cmd->add_subcommand(
      "dot", "Tree neighborhood with region values and arrows, DOT digraph");
  dot_cmd->fallthrough();
  dot_cmd->add_option("--radius", dot_radius,
                      "tree distance from the base triangle")
      ->check(CLI::Range(0, 16))
      ->capture_default_str();
  dot_cmd->callback([&] {
    markoff::MarkoffMap m(mu_from(mu_args), triple_from(base_args));
    emit_dot(m, dot_radius, std::cout);
  });

  // ---- verify ---------------------------------------------------------
  auto* verify_cmd = app.add_subcommand(
      "verify", "Randomized and grid verification of the sink statements");
  verify_cmd->fallthrough();
  verify_cmd->require_subcommand(1);

  std::string vsc_mu{"0"};
  auto* vsc_cmd = verify_cmd->add_subcommand(
      "sink-complex",
      "min |pq| over the complex sink domain against |tau_m|^2");
  vsc_cmd->fallthrough();
  vsc_cmd->add_option("--mu", vsc_mu, "parameter m, complex, m != 4")
      ->capture_default_str();
  vsc_cmd->callback([&] {
    exit_code = report_result(
        cfg, markoff::verify_complex_sink_constant(cx(vsc_mu), cfg.samples,
                                                   cfg.seed, cfg.workers));
  });

  std::string vsr_mu;
  double vsr_extent = 8.0;
  int vsr_steps = 160;
  auto* vsr_cmd = verify_cmd->add_subcommand(
      "sink-real", "real sink coordinates against max(|t'_mu|, 2)");
  vsr_cmd->fallthrough();
  vsr_cmd->add_option("--mu", vsr_mu, "real parameter, mu != 4")->required();
  vsr_cmd->add_option("--grid-extent", vsr_extent, "scan |x|, |y| up to this")
      ->capture_default_str();
  vsr_cmd->add_option("--grid-steps", vsr_steps, "grid resolution per axis")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  vsr_cmd->callback([&] {
    exit_code = report_result(
        cfg, markoff::verify_real_sink(real_arg(vsr_mu, "--mu"), vsr_extent,
                                       vsr_steps));
  });

  std::vector<std::string> vsp_mu;
  auto* vsp_cmd = verify_cmd->add_subcommand(
      "sink-positive", "positive sink coordinates against the cubic bound");
  vsp_cmd->fallthrough();
  vsp_cmd->add_option("--mu", vsp_mu, "l1 l2 l3 s, real, l_i >= 0, s <= 4")
      ->expected(4)
      ->required();
  vsp_cmd->callback([&] {
    exit_code = report_result(
        cfg, markoff::verify_positive_sink(mu_from(vsp_mu), cfg.samples,
                                           cfg.seed, cfg.workers));
  });

  auto* vh_cmd = verify_cmd->add_subcommand(
      "hat", "sinks of the shifted (x+y+z)^2 = xyz system against 9");
  vh_cmd->fallthrough();
  vh_cmd->callback([&] {
    exit_code = report_result(
        cfg, markoff::verify_hat_lemma(cfg.samples, cfg.seed, cfg.workers));
  });

  int g2_grid = 20;
  std::string g2_policy = "both";
  auto* vg_cmd = verify_cmd->add_subcommand(
      "genus2", "corner and branch inequalities of the genus-2 estimate");
  vg_cmd->fallthrough();
  vg_cmd->add_option("--grid", g2_grid, "steps per axis of the (a, d) grid")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  vg_cmd->add_option("--z-policy", g2_policy,
                     "corner probe side: z^2 above the split, below, or both")
      ->check(CLI::IsMember({"steep", "shallow", "both"}))
      ->capture_default_str();
  vg_cmd->callback([&] {
    markoff::CornerCase cc = g2_policy == "steep"
                                 ? markoff::CornerCase::SteepBranch
                             : g2_policy == "shallow"
                                 ? markoff::CornerCase::ShallowBranch
                                 : markoff::CornerCase::Both;
    exit_code = report_result(cfg, markoff::genus2_corner_check(
                                       g2_grid, g2_grid, cc));
  });

  // ---- tys ------------------------------------------------------------
  auto* tys_cmd =
      app.add_subcommand("tys", "Trace systoles and systole bounds");
  tys_cmd->fallthrough();
  tys_cmd->require_subcommand(1);

  std::string tt_k;
  auto* tt_cmd = tys_cmd->add_subcommand(
      "torus", "Trace systole of the torus with commutator trace k");
  tt_cmd->fallthrough();
  tt_cmd->add_option("k", tt_k, "commutator trace, complex literal, k != 2")
      ->required();
  tt_cmd->callback([&] {
    std::complex<double> k = cx(tt_k);
    double v = markoff::tys_torus(k);
    emit(cfg, json{{"k", markoff::complex_json(k)}, {"tys", v}}, {fmt(v)});
  });

  std::vector<std::string> ts_args;
  auto* ts_cmd = tys_cmd->add_subcommand(
      "sphere", "Trace systole bound of the four-punctured sphere");
  ts_cmd->fallthrough();
  ts_cmd->add_option("traces", ts_args, "boundary traces a b c d, real >= 0")
      ->expected(4)
      ->required();
  ts_cmd->callback([&] {
    double a = real_arg(ts_args[0], "a"), b = real_arg(ts_args[1], "b");
    double c = real_arg(ts_args[2], "c"), d = real_arg(ts_args[3], "d");
    markoff::PositiveBound pb = markoff::tys_sphere(a, b, c, d);
    std::vector<std::string> lines{"trace bound: " + fmt(pb.value)};
    if (pb.degenerate)
      lines.push_back("degenerate corner: the bound is the double root 2");
    emit(cfg,
         json{{"a", a}, {"b", b}, {"c", c}, {"d", d},
              {"trace_bound", pb.value}, {"degenerate", pb.degenerate}},
         lines);
  });

  std::vector<std::string> tn_chi;
  int tn_radius = 8;
  auto* tn_cmd = tys_cmd->add_subcommand(
      "n3", "Trace systole of the non-orientable genus-3 surface");
  tn_cmd->fallthrough();
  tn_cmd->add_option("--chi", tn_chi,
                     "character (a, b, c, d); bounds cosh(sys) for one-sided "
                     "curves of this character instead")
      ->expected(4);
  tn_cmd->add_option("--radius", tn_radius, "search radius for --chi")
      ->check(CLI::Range(1, 16))
      ->capture_default_str();
  tn_cmd->callback([&] {
    if (tn_chi.empty()) {
      double v = markoff::tys_n3();
      emit(cfg, json{{"tys", v}}, {fmt(v)});
      return;
    }
    std::array<std::complex<double>, 4> chi{cx(tn_chi[0]), cx(tn_chi[1]),
                                            cx(tn_chi[2]), cx(tn_chi[3])};
    markoff::SystoleBound b = markoff::n3_one_sided_bound(chi, tn_radius);
    emit(cfg, markoff::to_json(b),
         {"cosh(sys) <= " + fmt(b.value), "context: " + b.context});
  });

  auto* tq_cmd = tys_cmd->add_subcommand(
      "qf-sphere", "Systole bound for quasi-Fuchsian four-punctured spheres");
  tq_cmd->fallthrough();
  tq_cmd->callback([&] {
    markoff::SystoleBound b = markoff::qf_sphere_bound();
    emit(cfg, markoff::to_json(b),
         {"sys <= " + fmt(b.value), "context: " + b.context});
  });

  bool tb_cusp = false;
  double tb_length = 0.0, tb_angle = 0.0;
  auto* tb_cmd = tys_cmd->add_subcommand(
      "torus-bound", "Sharp cosh(sys/2) bound from torus boundary data");
  tb_cmd->fallthrough();
  auto* tb_cusp_opt = tb_cmd->add_flag("--cusp", tb_cusp, "cusp boundary");
  auto* tb_len_opt =
      tb_cmd->add_option("--length", tb_length, "geodesic boundary length");
  auto* tb_ang_opt = tb_cmd->add_option("--cone-angle", tb_angle,
                                        "cone angle in (0, 2*pi)");
  tb_cmd->callback([&] {
    int given = (tb_cusp_opt->count() > 0) + (tb_len_opt->count() > 0) +
                (tb_ang_opt->count() > 0);
    if (given != 1)
      throw std::invalid_argument(
          "give exactly one of --cusp, --length, --cone-angle");
    markoff::BoundarySpec spec;
    if (tb_cusp_opt->count()) {
      spec.kind = markoff::BoundarySpec::Kind::Cusp;
    } else if (tb_len_opt->count()) {
      spec.kind = markoff::BoundarySpec::Kind::GeodesicLength;
      spec.value = tb_length;
    } else {
      spec.kind = markoff::BoundarySpec::Kind::ConeAngle;
      spec.value = tb_angle;
    }
    markoff::SystoleBound b = markoff::torus_systole_bound(spec);
    emit(cfg, markoff::to_json(b),
         {"cosh(sys/2) <= " + fmt(b.value), "context: " + b.context});
  });

  std::string nf_k;
  std::vector<std::string> nf_base;
  auto* nf_cmd = tys_cmd->add_subcommand(
      "nonfuchsian", "Elliptic-or-short-curve dichotomy for real torus "
                     "characters with k > 2");
  nf_cmd->fallthrough();
  nf_cmd->add_option("k", nf_k, "commutator trace, real > 2")->required();
  nf_cmd->add_option("--base", nf_base,
                     "base triple; also runs the descent on it")
      ->expected(3);
  nf_cmd->callback([&] {
    double k = real_arg(nf_k, "k");
    markoff::NonFuchsianTorusReport rep =
        nf_base.empty()
            ? markoff::nonfuchsian_torus_report(k)
            : markoff::nonfuchsian_torus_report(k, triple_from(nf_base),
                                                cfg.depth_cap);
    std::vector<std::string> lines{
        "k: " + fmt(rep.k),
        "boundary length: " + fmt(rep.boundary_length)};
    if (rep.elliptic_guaranteed)
      lines.push_back("elliptic element guaranteed (2 < k < 18)");
    else
      lines.push_back("simple curve trace bound: " + fmt(rep.trace_bound));
    if (rep.descent_ran)
      lines.push_back(rep.small_region_fired
                          ? "descent: reached a region of modulus < 2"
                          : "descent: no region of modulus < 2 before the "
                            "depth cap");
    emit(cfg, markoff::to_json(rep), lines);
  });

  // ---- oracle ---------------------------------------------------------
  auto* oracle_cmd = app.add_subcommand("oracle", "Independent cross-checks");
  oracle_cmd->fallthrough();
  oracle_cmd->require_subcommand(1);

  std::size_t oc_trials = 100;
  std::int64_t oc_maxden = 34;
  double oc_rel = 1e-8;
  auto* oc_cmd = oracle_cmd->add_subcommand(
      "cross-check", "Matrix word traces against the vertex recursion");
  oc_cmd->fallthrough();
  oc_cmd->add_option("--trials", oc_trials, "random torus triples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  oc_cmd->add_option("--max-denominator", oc_maxden,
                     "check every slope with |p|, q up to this")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  oc_cmd->add_option("--rel-tol", oc_rel, "relative tolerance")
      ->capture_default_str();
  oc_cmd->callback([&] {
    markoff::OracleResult r =
        markoff::cross_check_torus_words(oc_trials, oc_maxden, cfg.seed,
                                         oc_rel);
    exit_code = r.passed ? 0 : 1;
    emit(cfg, markoff::to_json(r),
         {"trials: " + std::to_string(r.trials),
          "comparisons: " + std::to_string(r.comparisons),
          "max relative error: " + fmt(r.max_rel_error),
          "seed: " + std::to_string(r.seed),
          std::string("result: ") + (r.passed ? "PASSED" : "FAILED")});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int ret = app.exit(e);
    return ret == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
