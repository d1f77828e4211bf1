#include "unavoid/theory.hpp"

#include <algorithm>
#include <array>

namespace unavoid {

namespace {

constexpr int A = 0, B = 1, C = 2, D = 3;

PartialWord two(int s, int gap, int t) { return spaced_word(std::array{s, t}, std::array{gap}); }

PartialWord three(int s, int g1, int t, int g2, int u) {
  return spaced_word(std::array{s, t, u}, std::array{g1, g2});
}

// X0(3, m) minus the listed words, plus the replacements.
UniformSet replace_in_x0(int k, int m, const std::vector<PartialWord>& removed,
                         const std::vector<PartialWord>& added) {
  UniformSet x0 = build_x0(k, m);
  std::vector<PartialWord> words;
  for (const auto& w : x0.words())
    if (std::find(removed.begin(), removed.end(), w) == removed.end()) words.push_back(w);
  for (const auto& w : added) words.push_back(w);
  return UniformSet(x0.alphabet(), std::move(words));
}

std::string run(char c, int n) { return std::string(static_cast<std::size_t>(n), c); }

}  // namespace

int nu(long long p, long long n) {
  if (p < 2) throw std::invalid_argument("nu: p must be at least 2");
  if (n < 1) throw std::invalid_argument("nu: n must be positive");
  int q = 0;
  while (n % p == 0) {
    n /= p;
    ++q;
  }
  return q;
}

long long min_size_bound(int k) {
  if (k < 1) throw std::invalid_argument("min_size_bound: k must be positive");
  return k + static_cast<long long>(k) * (k - 1) / 2;
}

int max_fill(int m) {
  if (m < 4) throw std::invalid_argument("max_fill: m must be at least 4");
  return m % 2 == 0 ? m - 1 : m;
}

HoleBound holes_bound(int k, int m) {
  if (k < 2) throw std::invalid_argument("holes_bound: k must be at least 2");
  int fill = max_fill(m);
  return {min_size_bound(k) * (m - 2) - fill, fill, k >= 3};
}

ConjectureInstance::ConjectureInstance(int m_, int x1_, int y1_) : m(m_), x1(x1_), y1(y1_) {
  if (m < 3) throw std::invalid_argument("instance: m must be at least 3");
  if (x1 < 0 || x1 > m - 3 || y1 < 0 || y1 > m - 3)
    throw std::invalid_argument("instance: splits must lie in [0, m-3]");
}

UniformSet ConjectureInstance::set() const {
  return replace_in_x0(3, m, {two(A, m - 2, B), two(B, m - 2, C)},
                       {three(A, x1, B, x2(), B), three(B, y1, B, y2(), C)});
}

Eq2Instance::Eq2Instance(int m_, int x1_, int y1_) : m(m_), x1(x1_), y1(y1_) {
  if (m < 3) throw std::invalid_argument("instance: m must be at least 3");
  if (x1 < 0 || x1 > m - 3 || y1 < 0 || y1 > m - 3)
    throw std::invalid_argument("instance: splits must lie in [0, m-3]");
}

UniformSet Eq2Instance::set() const {
  return replace_in_x0(3, m, {two(A, m - 2, A), two(B, m - 2, C)},
                       {three(A, x1, A, x2(), A), three(B, y1, C, y2(), C)});
}

UniformSet prop2_sets(int m, int variant, std::span<const int> splits) {
  if (variant == 1) {
    if (splits.size() < 1) throw std::invalid_argument("prop2_sets: need at least one gap");
    int sum = 0;
    for (int g : splits) sum += g;
    int q = static_cast<int>(splits.size()) - 1;  // interior a count
    if (sum != m - 2 - q) throw std::invalid_argument("prop2_sets: gaps must sum to m-2-q");
    std::vector<int> letters(splits.size() + 1, A);
    return replace_in_x0(3, m, {two(A, m - 2, A)}, {spaced_word(letters, splits)});
  }
  if (variant == 2) {
    if (splits.size() != 2) throw std::invalid_argument("prop2_sets: variant 2 takes two gaps");
    if (splits[0] + splits[1] != m - 3)
      throw std::invalid_argument("prop2_sets: gaps must sum to m-3");
    return replace_in_x0(3, m, {two(A, m - 2, A)}, {three(A, splits[0], B, splits[1], A)});
  }
  throw std::invalid_argument("prop2_sets: variant must be 1 or 2");
}

bool prop3_avoidable(int m, int x1_a, int y1_b) {
  int r = nu(2, x1_a + 1), s = nu(2, y1_b + 1), t = nu(2, m - 1);
  return m % 2 == 1 && r == s && r < t;
}

UniformSet prop3_set(int m, int x1_a, int y1_b) {
  return replace_in_x0(3, m, {two(A, m - 2, A), two(B, m - 2, B)},
                       {three(A, x1_a, A, m - 3 - x1_a, A), three(B, y1_b, B, m - 3 - y1_b, B)});
}

UniformSet prop4_sets(int m, std::pair<int, int> xs, std::pair<int, int> ys,
                      std::pair<int, int> zs) {
  for (auto [g1, g2] : {xs, ys, zs})
    if (g1 < 0 || g2 < 0 || g1 + g2 != m - 3)
      throw std::invalid_argument("prop4_sets: each gap pair must sum to m-3");
  return replace_in_x0(3, m, {two(A, m - 2, A), two(B, m - 2, B), two(C, m - 2, C)},
                       {three(A, xs.first, A, xs.second, A), three(B, ys.first, B, ys.second, B),
                        three(C, zs.first, C, zs.second, C)});
}

UniformSet algo1_set(int m, int x1, Algo1Case which) {
  if (x1 < 0 || x1 > m - 3) throw std::invalid_argument("algo1_set: x1 out of range");
  int x2 = m - 3 - x1;
  PartialWord filled = which == Algo1Case::CIntoAC ? three(A, x1, C, x2, C) : three(A, x1, A, x2, C);
  return replace_in_x0(3, m, {two(A, m - 2, C)}, {filled});
}

std::optional<PeriodicWord> prop_algo1_avoider(int m, int x1, Algo1Case which) {
  if (x1 < 0 || x1 > m - 3) throw std::invalid_argument("prop_algo1_avoider: x1 out of range");
  int x2 = m - 3 - x1;
  Alphabet abc(3);
  if (which == Algo1Case::CIntoAC) {
    if ((x2 + 1) % (x1 + 1) != 0) return std::nullopt;
    std::string base = run('a', x1 + 1) + run('b', x2 + 1) + run('c', x1 + 1) + run('a', x2 + 1) +
                       run('b', x1 + 1) + run('c', x2 + 1);
    PeriodicWord w(abc, base);
    if (!avoids_set(w, algo1_set(m, x1, which)))
      throw std::logic_error("prop_algo1_avoider: displayed word does not avoid");
    return w;
  }
  if ((x1 + 1) % (x2 + 1) != 0) return std::nullopt;
  PeriodicWord w(abc, run('a', x1 + 1) + run('b', x2 + 1) + run('c', x1 + 1));
  if (!avoids_set(w, algo1_set(m, x1, which)))
    throw std::logic_error("prop_algo1_avoider: displayed word does not avoid");
  return w;
}

bool prop_harder_unavoidable(int case_id, int m, int split) {
  if (case_id < 1 || case_id > 4) throw std::invalid_argument("prop_harder: case must be 1..4");
  return nu(2, split + 1) <= nu(2, m - 1);
}

UniformSet harder_set(int case_id, int m, int x1) {
  if (x1 < 0 || x1 > m - 3) throw std::invalid_argument("harder_set: x1 out of range");
  int x2 = m - 3 - x1;
  switch (case_id) {
    case 1: return replace_in_x0(3, m, {two(A, m - 2, B)}, {three(A, x1, B, x2, B)});
    case 2: return replace_in_x0(3, m, {two(A, m - 2, B)}, {three(A, x1, A, x2, B)});
    case 3: return replace_in_x0(3, m, {two(B, m - 2, C)}, {three(B, x1, B, x2, C)});
    case 4: return replace_in_x0(3, m, {two(B, m - 2, C)}, {three(B, x1, C, x2, C)});
    default: throw std::invalid_argument("harder_set: case must be 1..4");
  }
}

bool thm_2bottom_unavoidable(int m, int x1, int x2, int x3) {
  if (x1 < 0 || x2 < 0 || x3 < 0 || x1 + x2 + x3 != m - 4)
    throw std::invalid_argument("thm_2bottom: gaps must sum to m-4");
  int s = nu(2, m - 1), t = nu(2, x1 + 1), r = nu(2, x1 + x2 + 2);
  if (s < t || s < r) return false;
  if (x1 == x2 || x1 == x3) return true;
  return m == 7 * (x1 + 1) + 1 && (x2 + 1 == 2 * (x1 + 1) || x2 + 1 == 4 * (x1 + 1));
}

UniformSet thm_2bottom_set(int m, int x1, int x2, int x3) {
  if (x1 < 0 || x2 < 0 || x3 < 0 || x1 + x2 + x3 != m - 4)
    throw std::invalid_argument("thm_2bottom_set: gaps must sum to m-4");
  PartialWord filled =
      spaced_word(std::array{A, B, B, B}, std::array{x1, x2, x3});
  return UniformSet(Alphabet(2), {two(A, m - 2, A), two(B, m - 2, B), filled});
}

ConjectureInstance prop_x1y2_partner(const ConjectureInstance& inst) {
  return ConjectureInstance(inst.m, inst.y2(), inst.x2());
}

// Run structure of (a^p c^q b^p)^Z against the two filled words forces
// x1+1 <= q (a-then-b gap) and q <= y1+1 (b-run tail, c at distance m-1),
// besides q <= p for the c-run. q is pinned to the largest feasible value.
PeriodicWord prop_avoidingword_certificate(const ConjectureInstance& inst) {
  if (inst.x1 > inst.x2())
    throw std::invalid_argument("prop_avoidingword: requires x1 <= x2");
  int q = std::min((inst.m - 1) / 2, inst.y1 + 1);
  int p = inst.m - 1 - q;
  if (q < inst.x1 + 1)
    throw std::invalid_argument("prop_avoidingword: no feasible block split (x1 > y1)");
  PeriodicWord w(Alphabet(3), run('a', p) + run('c', q) + run('b', p));
  if (!avoids_set(w, inst.set()))
    throw std::logic_error("prop_avoidingword: constructed word does not avoid");
  return w;
}

bool prop_eveneven_applicable(const ConjectureInstance& inst) {
  int x2 = inst.x2();
  if (inst.x1 % 2 == 0 && inst.y1 % 2 == 0 && inst.y1 <= x2 && x2 <= inst.x1) return true;
  return inst.y1 == 0 && x2 <= inst.x1;
}

bool prop_iff_unavoidable(int m, int x1, int y) {
  if (m != 2 * y + 3) throw std::invalid_argument("prop_iff: requires m = 2y+3");
  if (x1 < 0 || x1 > m - 3) throw std::invalid_argument("prop_iff: x1 out of range");
  return nu(2, x1 + 1) != nu(2, y + 1);
}

UniformSet prop_iff_y2prime_set(int m, int x1, int y1) {
  int x2 = m - 3 - x1, y2 = m - 3 - y1;
  return replace_in_x0(3, m, {two(A, m - 2, A), two(B, m - 2, C)},
                       {three(A, x1, A, x2, A), three(B, y2, B, y1, C)});
}

UniformSet bottomfour_set(int k, int m, int x1, int x2, int y1, int y2) {
  if (k < 4) throw std::invalid_argument("bottomfour: k must be at least 4");
  if (x1 + x2 != m - 3 || y1 + y2 != m - 3 || x1 < 0 || x2 < 0 || y1 < 0 || y2 < 0)
    throw std::invalid_argument("bottomfour: gap pairs must sum to m-3");
  return replace_in_x0(k, m, {two(A, m - 2, B), two(C, m - 2, D)},
                       {three(A, x1, B, x2, B), three(C, y1, D, y2, D)});
}

PeriodicWord prop_bottomfour_avoider(int k, int m, int x1, int x2, int y1, int y2) {
  UniformSet set = bottomfour_set(k, m, x1, x2, y1, y2);
  auto le = [](int a, int b, int c, int d) { return a <= b && b <= c && c <= d; };
  bool prime_form;  // w' = (a^p c^q b^p d^q)^Z
  if (le(x1, y1, y2, x2) || le(x1, y2, y1, x2) || le(y1, x1, x2, y2)) {
    prime_form = true;
  } else if (le(y2, x1, x2, y1) || le(x2, y1, y2, x1) || le(x2, y2, y1, x1)) {
    prime_form = false;
  } else if (le(y1, x2, x1, y2)) {
    prime_form = true;
  } else if (le(y2, x2, x1, y1)) {
    prime_form = false;
  } else {
    throw std::logic_error("prop_bottomfour: no case ordering matched");
  }
  Alphabet abcd(k);
  PeriodicWord w = [&] {
    if (prime_form) {
      int q = std::min(y2 + 1, m - 2), p = m - 1 - q;
      return PeriodicWord(abcd, run('a', p) + run('c', q) + run('b', p) + run('d', q));
    }
    // prefix-of-block form: v = (a^{x2+1} b^{x2+1})^N, u = (c^{y2+1} d^{y2+1})^N
    int p = y2 + 1, q = m - 1 - p;
    auto prefix = [](char lo, char hi, int block, int len) {
      std::string s;
      for (int i = 0; i < len; ++i) s.push_back((i / block) % 2 == 0 ? lo : hi);
      return s;
    };
    auto flip = [](std::string s, char lo, char hi) {
      for (char& c : s) c = (c == lo ? hi : lo);
      return s;
    };
    std::string vp = prefix('a', 'b', x2 + 1, p), uq = prefix('c', 'd', y2 + 1, q);
    return PeriodicWord(abcd, vp + uq + flip(vp, 'a', 'b') + flip(uq, 'c', 'd'));
  }();
  if (!avoids_set(w, set)) throw std::logic_error("prop_bottomfour: constructed word does not avoid");
  return w;
}

UniformSet bottomendpoints_set(int k, int m, int i, int p, int gap, int fill_letter) {
  if (i < 1 || p < 2 || i + p > k)
    throw std::invalid_argument("bottomendpoints: need 1 <= i and i+2 <= i+p <= k");
  if (gap < 0 || gap > m - 3) throw std::invalid_argument("bottomendpoints: gap out of range");
  if (fill_letter < 0 || fill_letter >= k)
    throw std::invalid_argument("bottomendpoints: fill letter out of range");
  int lo = i - 1, hi = i + p - 1;
  return replace_in_x0(k, m, {two(lo, m - 2, hi)}, {three(lo, gap, fill_letter, m - 3 - gap, hi)});
}

Verdict prop_bottomendpoints_check(int k, int m, int i, int p, int gap, int fill_letter) {
  UniformSet set = bottomendpoints_set(k, m, i, p, gap, fill_letter);
  Verdict v = decide(set, 2 * m - 1);
  if (!v.avoidable()) throw std::logic_error("prop_bottomendpoints: expected an avoidable set");
  return v;
}

UniformSet switcharound_x2prime(const ConjectureInstance& inst) {
  return replace_in_x0(3, inst.m, {two(A, inst.m - 2, B), two(B, inst.m - 2, C)},
                       {three(A, inst.x2(), A, inst.x1, B), three(B, inst.y1, B, inst.y2(), C)});
}

UniformSet switcharound_y2prime(const ConjectureInstance& inst) {
  return replace_in_x0(3, inst.m, {two(A, inst.m - 2, B), two(B, inst.m - 2, C)},
                       {three(A, inst.y2(), A, inst.y1, B), three(B, inst.x1, C, inst.x2(), C)});
}

UniformSet switcharound_y2(const ConjectureInstance& inst) {
  return replace_in_x0(3, inst.m, {two(A, inst.m - 2, B), two(B, inst.m - 2, C)},
                       {three(A, inst.y1, B, inst.y2(), B), three(B, inst.x1, C, inst.x2(), C)});
}

}  // namespace unavoid
