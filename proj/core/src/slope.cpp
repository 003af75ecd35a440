#include "markoff/slope.hpp"

#include <array>
#include <cstdlib>
#include <numeric>

namespace markoff {

namespace {

using i128 = __int128;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw slope_overflow_error("slope arithmetic exceeds 64-bit range");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r))
    throw slope_overflow_error("slope arithmetic exceeds 64-bit range");
  return r;
}

std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

i128 cross(const Slope& a, const Slope& b) noexcept {
  return i128(a.p) * i128(b.q) - i128(a.q) * i128(b.p);
}

}  // namespace

Slope make_slope(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw std::invalid_argument("slope 0/0 is undefined");
  if (q < 0) {
    p = checked_neg(p);
    q = checked_neg(q);
  }
  if (q == 0) return Slope{1, 0};
  std::int64_t g = std::gcd(p < 0 ? -p : p, q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
  return Slope{p, q};
}

std::strong_ordering slope_order(const Slope& a, const Slope& b) noexcept {
  if (a.infinite() && b.infinite()) return std::strong_ordering::equal;
  if (a.infinite()) return std::strong_ordering::greater;
  if (b.infinite()) return std::strong_ordering::less;
  i128 lhs = i128(a.p) * i128(b.q);
  i128 rhs = i128(b.p) * i128(a.q);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool is_farey_neighbor(const Slope& a, const Slope& b) noexcept {
  i128 d = cross(a, b);
  return d == 1 || d == -1;
}

Slope mediant(const Slope& a, const Slope& b) {
  if (!is_farey_neighbor(a, b))
    throw std::domain_error("mediant requires Farey neighbors");
  return make_slope(checked_add(a.p, b.p), checked_add(a.q, b.q));
}

std::array<Slope, 2> common_neighbors(const Slope& a, const Slope& b) {
  Slope sum = mediant(a, b);
  Slope diff = make_slope(checked_sub(a.p, b.p), checked_sub(a.q, b.q));
  if (diff < sum) return {diff, sum};
  return {sum, diff};
}

int color(const Slope& s) noexcept {
  bool p_odd = (s.p % 2) != 0;
  bool q_odd = (s.q % 2) != 0;
  if (p_odd && !q_odd) return 1;
  if (!p_odd && q_odd) return 2;
  return 3;  // (1,1); (0,0) cannot occur in lowest terms
}

std::string to_string(const Slope& s) {
  if (s.infinite()) return "inf";
  if (s.q == 1) return std::to_string(s.p);
  return std::to_string(s.p) + "/" + std::to_string(s.q);
}

Slope parse_slope(const std::string& text) {
  if (text == "inf" || text == "-inf" || text == "oo") return infinity_slope();
  auto parse_int = [](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("empty slope component");
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed slope: " + part);
    }
    if (used != part.size())
      throw std::invalid_argument("malformed slope: " + part);
    return v;
  };
  auto pos = text.find('/');
  if (pos == std::string::npos) return make_slope(parse_int(text), 1);
  return make_slope(parse_int(text.substr(0, pos)),
                    parse_int(text.substr(pos + 1)));
}

}  // namespace markoff
