#include "markoff/serialize.hpp"

#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace markoff {

namespace {

using nlohmann::json;

double parse_double_full(const std::string& text) {
  std::size_t used = 0;
  double v;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  if (used != text.size())
    throw std::invalid_argument("trailing characters in number: '" + text + "'");
  return v;
}

std::string component(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace

json complex_json(std::complex<double> v) {
  return json::array({v.real(), v.imag()});
}

std::complex<double> parse_complex(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty complex literal");
  if (text.back() != 'i') return {parse_double_full(text), 0.0};
  std::string body = text.substr(0, text.size() - 1);
  // Split at the last sign that is neither leading nor an exponent sign.
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' &&
        body[k - 1] != 'E') {
      double re = parse_double_full(body.substr(0, k));
      std::string im = body.substr(k);
      if (im == "+") return {re, 1.0};
      if (im == "-") return {re, -1.0};
      return {re, parse_double_full(im)};
    }
  }
  if (body.empty() || body == "+") return {0.0, 1.0};
  if (body == "-") return {0.0, -1.0};
  return {0.0, parse_double_full(body)};
}

std::string format_complex(std::complex<double> v) {
  if (v.imag() == 0.0) return component(v.real());
  std::string out = component(v.real());
  if (!(v.imag() < 0.0)) out += "+";
  out += component(v.imag());
  out += "i";
  return out;
}

json to_json(const MuParams& mu) {
  return json::array({complex_json(mu.lambda1), complex_json(mu.lambda2),
                      complex_json(mu.lambda3), complex_json(mu.s)});
}

json to_json(const MarkoffTriple& t) {
  return json::array(
      {complex_json(t.x1), complex_json(t.x2), complex_json(t.x3)});
}

json to_json(const Triangle& t) {
  json out = json::array();
  for (const Slope& s : t.regions) out.push_back(to_string(s));
  return out;
}

json map_snapshot(const MarkoffMap& map) {
  json regions = json::object();
  for (const auto& [slope, value] : map.cached_regions())
    regions[to_string(slope)] = complex_json(value);
  return json{{"mu", to_json(map.mu())},
              {"base", to_json(map.base())},
              {"regions", regions}};
}

json to_json(const ReductionOutcome& r) {
  const char* kind = nullptr;
  switch (r.kind) {
    case ReductionOutcome::Kind::SinkFound: kind = "sink-found"; break;
    case ReductionOutcome::Kind::SmallRegion: kind = "small-region"; break;
    case ReductionOutcome::Kind::DepthExceeded: kind = "depth-exceeded"; break;
  }
  json trace = json::array();
  for (const Triangle& t : r.trace) trace.push_back(to_json(t));
  json out{{"kind", kind},
           {"vertex", to_json(r.vertex)},
           {"triple", to_json(r.triple)},
           {"precision_loss", r.precision_loss},
           {"trace", trace}};
  if (r.kind == ReductionOutcome::Kind::SmallRegion) {
    out["region"] = to_string(r.region);
    out["value"] = complex_json(r.value);
  }
  return out;
}

json to_json(const VerificationReport& r) {
  json witness = json::array();
  for (const auto& w : r.witness) witness.push_back(complex_json(w));
  return json{{"theorem", r.theorem},   {"samples", r.samples},
              {"kept", r.kept},         {"worst_margin", r.worst_margin},
              {"tolerance", r.tolerance}, {"witness", witness},
              {"passed", r.passed},     {"seed", r.seed},
              {"details", r.details}};
}

json to_json(const SystoleBound& b) {
  const char* q = nullptr;
  switch (b.quantity) {
    case SystoleBound::Quantity::CoshHalfSys: q = "cosh_half_sys"; break;
    case SystoleBound::Quantity::CoshSys: q = "cosh_sys"; break;
    case SystoleBound::Quantity::Length: q = "length"; break;
  }
  return json{{"quantity", q}, {"value", b.value}, {"context", b.context}};
}

json to_json(const OracleResult& r) {
  return json{{"trials", r.trials},
              {"comparisons", r.comparisons},
              {"max_rel_error", r.max_rel_error},
              {"passed", r.passed},
              {"seed", r.seed}};
}

json to_json(const NonFuchsianTorusReport& r) {
  json out{{"k", r.k},
           {"elliptic_guaranteed", r.elliptic_guaranteed},
           {"boundary_length", r.boundary_length},
           {"descent_ran", r.descent_ran}};
  if (!r.elliptic_guaranteed) out["trace_bound"] = r.trace_bound;
  if (r.descent_ran) out["small_region_fired"] = r.small_region_fired;
  return out;
}

}  // namespace markoff
