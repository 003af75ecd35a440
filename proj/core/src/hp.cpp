#include "markoff/hp.hpp"

#include <boost/multiprecision/cpp_complex.hpp>

#include "markoff/cubic.hpp"

namespace markoff {

namespace {

using HC = boost::multiprecision::cpp_complex_50;
using HR = HC::value_type;

HC widen(std::complex<double> v) { return HC(v.real(), v.imag()); }

basic_markoff_map<HC> widen_map(const MuParams& mu, const MarkoffTriple& base) {
  basic_mu_params<HC> hmu{widen(mu.lambda1), widen(mu.lambda2),
                          widen(mu.lambda3), widen(mu.s)};
  basic_triple<HC> hbase{widen(base.x1), widen(base.x2), widen(base.x3)};
  return basic_markoff_map<HC>(hmu, hbase);
}

std::string render(const HC& v) {
  HR re = v.real(), im = v.imag();
  if (re == 0) re = HR(0);  // drop negative-zero signs
  if (im == 0) im = HR(0);
  std::string out = re.str();
  std::string ims = im.str();
  if (ims.empty() || ims[0] != '-') out += "+";
  out += ims;
  out += "i";
  return out;
}

}  // namespace

std::string hp_region_value(const MuParams& mu, const MarkoffTriple& base,
                            const Slope& slope) {
  basic_markoff_map<HC> map = widen_map(mu, base);
  return render(map.region_value(slope));
}

std::string hp_dominant_root(std::complex<double> a) {
  HC t = widen(dominant_root(a));
  HC ha = widen(a);
  for (int i = 0; i < 256; ++i) {
    HC f = ((t - 3) * t) * t + ha;
    if (abs(f) <= HR("1e-80") * (1 + abs(t) * abs(t) * abs(t))) break;
    HC fp = (3 * t - 6) * t;
    if (abs(fp) < HR("1e-60")) break;  // multiple root; cannot sharpen
    t -= f / fp;
  }
  return render(t);
}

ReductionOutcome hp_trace_reduce(const MuParams& mu, const MarkoffTriple& base,
                                 const Triangle& start, int depth_cap) {
  basic_markoff_map<HC> map = widen_map(mu, base);
  return basic_trace_reduce(map, start, depth_cap);
}

}  // namespace markoff
