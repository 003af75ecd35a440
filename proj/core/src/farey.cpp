#include "markoff/farey.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace markoff {

namespace {

using i128 = __int128;

void sort_regions(std::array<Slope, 3>& r) {
  std::sort(r.begin(), r.end(),
            [](const Slope& a, const Slope& b) { return a < b; });
}

}  // namespace

bool operator<(const Triangle& a, const Triangle& b) noexcept {
  for (int i = 0; i < 3; ++i) {
    auto c = slope_order(a.regions[i], b.regions[i]);
    if (c == std::strong_ordering::less) return true;
    if (c == std::strong_ordering::greater) return false;
  }
  return false;
}

Triangle make_triangle(const Slope& a, const Slope& b, const Slope& c) {
  if (!is_farey_neighbor(a, b) || !is_farey_neighbor(b, c) ||
      !is_farey_neighbor(a, c))
    throw std::domain_error("slopes do not span a triangle: " + to_string(a) +
                            ", " + to_string(b) + ", " + to_string(c));
  Triangle t{{a, b, c}};
  sort_regions(t.regions);
  assert(color(t.regions[0]) + color(t.regions[1]) + color(t.regions[2]) == 6);
  return t;
}

Triangle base_triangle() {
  return make_triangle(make_slope(0, 1), make_slope(1, 1), infinity_slope());
}

const Slope& region_of_color(const Triangle& t, int color_index) {
  for (const Slope& s : t.regions)
    if (color(s) == color_index) return s;
  throw std::invalid_argument("color index must be 1, 2 or 3");
}

TreeEdge make_edge(const Slope& a, const Slope& b) {
  auto opp = common_neighbors(a, b);  // validates adjacency
  TreeEdge e;
  e.flank = a < b ? std::array<Slope, 2>{a, b} : std::array<Slope, 2>{b, a};
  e.opposite = opp;
  assert(color(opp[0]) == color(opp[1]));
  return e;
}

Triangle edge_endpoint(const TreeEdge& e, int which) {
  return make_triangle(e.flank[0], e.flank[1], e.opposite[which]);
}

int edge_color(const TreeEdge& e) { return color(e.opposite[0]); }

std::array<NeighborStep, 3> triangle_neighbors(const Triangle& t) {
  std::array<NeighborStep, 3> out;
  for (int i = 0; i < 3; ++i) {
    const Slope& removed = t.regions[i];
    const Slope& f0 = t.regions[(i + 1) % 3];
    const Slope& f1 = t.regions[(i + 2) % 3];
    TreeEdge e = make_edge(f0, f1);
    const Slope& added =
        e.opposite[0] == removed ? e.opposite[1] : e.opposite[0];
    out[i] = NeighborStep{e, make_triangle(f0, f1, added), removed, added};
  }
  return out;
}

namespace {

// The last continued-fraction convergent of P/Q strictly before P/Q itself.
// Requires P >= 1, Q >= 2, gcd(P, Q) = 1.
Slope previous_convergent(std::int64_t P, std::int64_t Q) {
  std::int64_t pm1 = 1, qm1 = 0;  // convergent p_{k-1}/q_{k-1}
  std::int64_t pm2 = 0, qm2 = 1;
  std::int64_t n = P, d = Q;
  while (true) {
    std::int64_t a = n / d;
    std::int64_t rem = n % d;
    std::int64_t pc = a * pm1 + pm2;
    std::int64_t qc = a * qm1 + qm2;
    if (rem == 0) return Slope{pm1, qm1};
    pm2 = pm1;
    qm2 = qm1;
    pm1 = pc;
    qm1 = qc;
    n = d;
    d = rem;
  }
}

}  // namespace

SlopeAncestry slope_ancestry(const Slope& s) {
  const Slope zero = make_slope(0, 1);
  const Slope one = make_slope(1, 1);
  if (s == zero || s == one || s.infinite())
    throw std::domain_error("base regions have no ancestry");
  if (s.q == 1) {
    // Integer fans around infinity.
    if (s.p >= 2)
      return SlopeAncestry{{infinity_slope(), make_slope(s.p - 1, 1)},
                           make_slope(s.p - 2, 1)};
    return SlopeAncestry{{infinity_slope(), make_slope(s.p + 1, 1)},
                         make_slope(s.p + 2, 1)};
  }
  bool negative = s.p < 0;
  std::int64_t P = negative ? -s.p : s.p;
  Slope c = previous_convergent(P, s.q);
  Slope d = make_slope(P - c.p, s.q - c.q);
  // back = normalized difference of the parents; q components may cancel,
  // in which case the replaced region is infinity.
  Slope back = make_slope(c.p - d.p, c.q - d.q);
  if (negative) {
    c = make_slope(-c.p, c.q);
    d = make_slope(-d.p, d.q);
    back = back.infinite() ? back : make_slope(-back.p, back.q);
  }
  assert(mediant(c, d) == s);
  assert(is_farey_neighbor(back, c) && is_farey_neighbor(back, d));
  return SlopeAncestry{{c, d}, back};
}

// ---------------------------------------------------------------------------
// Words
// ---------------------------------------------------------------------------

Letter inverse(Letter l) noexcept {
  switch (l) {
    case Letter::a: return Letter::A;
    case Letter::A: return Letter::a;
    case Letter::b: return Letter::B;
    default: return Letter::b;
  }
}

Word slope_word(const Slope& s) {
  if (s.infinite()) return Word{{Letter::a}};
  if (s.p == 0) return Word{{Letter::b}};
  std::int64_t P = s.p < 0 ? -s.p : s.p;
  std::int64_t Q = s.q;
  std::int64_t n = P + Q;
  Word w;
  w.letters.reserve(static_cast<std::size_t>(n));
  // Balanced-word form of the mediant recursion W(m(L,R)) = W(R) W(L):
  // letter i is 'a' exactly when ceil((i+1)P/n) steps past ceil(iP/n).
  auto ceil_div = [](i128 x, i128 y) { return (x + y - 1) / y; };
  i128 prev = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    i128 cur = ceil_div(i128(i + 1) * P, n);
    w.letters.push_back(cur > prev ? Letter::a : Letter::b);
    prev = cur;
  }
  if (s.p < 0)
    for (Letter& l : w.letters)
      if (l == Letter::b) l = Letter::B;
  return w;
}

bool is_freely_reduced(const Word& w) noexcept {
  for (std::size_t i = 1; i < w.letters.size(); ++i)
    if (w.letters[i] == inverse(w.letters[i - 1])) return false;
  return true;
}

bool is_primitive_word(const Word& w) noexcept {
  std::size_t n = w.letters.size();
  if (n == 0) return false;
  for (std::size_t d = 1; d * 2 <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i)
      periodic = w.letters[i] == w.letters[i - d];
    if (periodic) return false;
  }
  return true;
}

std::pair<std::int64_t, std::int64_t> word_exponents(const Word& w) noexcept {
  std::int64_t ea = 0, eb = 0;
  for (Letter l : w.letters) {
    switch (l) {
      case Letter::a: ++ea; break;
      case Letter::A: --ea; break;
      case Letter::b: ++eb; break;
      case Letter::B: --eb; break;
    }
  }
  return {ea, eb};
}

std::string to_string(const Word& w) {
  std::string out;
  out.reserve(w.letters.size());
  for (Letter l : w.letters) {
    switch (l) {
      case Letter::a: out.push_back('a'); break;
      case Letter::b: out.push_back('b'); break;
      case Letter::A: out.push_back('A'); break;
      case Letter::B: out.push_back('B'); break;
    }
  }
  return out;
}

}  // namespace markoff
