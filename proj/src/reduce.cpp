#include "unavoid/reduce.hpp"

#include <algorithm>
#include <array>

namespace unavoid {

UniformSet apply_trace(const UniformSet& start, const ReductionTrace& trace) {
  std::vector<PartialWord> words = start.words();
  for (const auto& step : trace.steps) {
    for (const auto& r : step.removed) {
      auto it = std::find(words.begin(), words.end(), r);
      if (it == words.end()) throw std::logic_error("trace replay: removed word not present");
      words.erase(it);
    }
    for (const auto& a : step.added)
      if (std::find(words.begin(), words.end(), a) == words.end()) words.push_back(a);
  }
  return UniformSet(start.alphabet(), std::move(words));
}

UniformSet factoring(const UniformSet& X, ReductionTrace* trace) {
  std::vector<PartialWord> words = X.words();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = 0; j < words.size(); ++j) {
        if (i == j) continue;
        if (weakening_of_factor(words[j], words[i])) {
          if (trace) trace->steps.push_back({"factoring", {words[i]}, {}});
          words.erase(words.begin() + static_cast<long>(i));
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  return UniformSet(X.alphabet(), std::move(words));
}

UniformSet prefix_suffix(const UniformSet& X, const PartialWord& x, bool allow_self_witness,
                         ReductionTrace* trace) {
  if (!X.contains(x)) throw std::invalid_argument("prefix-suffix: word not in set");
  if (x.empty() || !x.defined(x.size() - 1))
    throw std::invalid_argument("prefix-suffix: word must end in a letter");
  PartialWord y = x.factor(0, x.size() - 1);
  const int k = X.alphabet().size();
  for (int b = 0; b < k; ++b) {
    bool witnessed = false;
    // Longest suffix first: z runs from y itself down to the empty word.
    for (std::size_t zlen = y.size() + 1; zlen-- > 0 && !witnessed;) {
      auto zb = y.factor(y.size() - zlen, zlen).symbols();
      zb.push_back(static_cast<std::int8_t>(b));
      PartialWord target{std::move(zb)};
      for (const auto& v : X.words()) {
        if (!allow_self_witness && v == x) continue;
        if (v.size() != target.size()) continue;
        if (is_weakening(v, target, /*strict=*/true)) {
          witnessed = true;
          break;
        }
      }
    }
    if (!witnessed)
      throw std::invalid_argument(std::string("prefix-suffix: no witness for letter '") +
                                  X.alphabet().letter(b) + "'");
  }
  std::vector<PartialWord> words;
  for (const auto& w : X.words())
    if (!(w == x)) words.push_back(w);
  words.push_back(y);
  if (trace) trace->steps.push_back({"prefix-suffix", {x}, {y}});
  return UniformSet(X.alphabet(), std::move(words));
}

UniformSet hole_truncation(const UniformSet& X, ReductionTrace* trace) {
  std::vector<PartialWord> words;
  words.reserve(X.size());
  for (const auto& w : X.words()) {
    std::size_t first = 0, last = w.size();
    while (first < w.size() && !w.defined(first)) ++first;
    while (last > first && !w.defined(last - 1)) --last;
    if (first == 0 && last == w.size()) {
      words.push_back(w);
      continue;
    }
    PartialWord cut = w.factor(first, last - first);
    if (trace) trace->steps.push_back({"hole-truncation", {w}, {cut}});
    words.push_back(std::move(cut));
  }
  return UniformSet(X.alphabet(), std::move(words));
}

UniformSet expand(const UniformSet& X, const PartialWord& x,
                  const std::vector<std::size_t>& positions, ReductionTrace* trace) {
  if (!X.contains(x)) throw std::invalid_argument("expand: word not in set");
  for (std::size_t p : positions)
    if (p >= x.size() || x.defined(p))
      throw std::invalid_argument("expand: position " + std::to_string(p) + " is not a hole");
  const int k = X.alphabet().size();
  std::vector<PartialWord> fills{x};
  for (std::size_t p : positions) {
    std::vector<PartialWord> next;
    next.reserve(fills.size() * static_cast<std::size_t>(k));
    for (const auto& w : fills)
      for (int c = 0; c < k; ++c) next.push_back(w.strengthened(p, c));
    fills = std::move(next);
  }
  std::vector<PartialWord> words;
  for (const auto& w : X.words())
    if (!(w == x)) words.push_back(w);
  words.insert(words.end(), fills.begin(), fills.end());
  if (trace) trace->steps.push_back({"expand", {x}, fills});
  return UniformSet(X.alphabet(), std::move(words));
}

UniformSet derive_prop_iff_y(int m, int x1, int y) {
  if (y < 0 || m != 2 * y + 3) throw std::invalid_argument("derive_prop_iff_y: need m = 2y+3");
  if (x1 < 0 || x1 > m - 3) throw std::invalid_argument("derive_prop_iff_y: x1 out of range");
  const int a = 0, b = 1, c = 2;
  auto two = [&](int s, int g, int t) { return spaced_word(std::array{s, t}, std::array{g}); };
  auto three = [&](int s, int g1, int t, int g2, int u) {
    return spaced_word(std::array{s, t, u}, std::array{g1, g2});
  };
  std::vector<PartialWord> words{
      two(a, x1, a), two(b, y, b), two(b, y, c), two(c, y, b), two(c, y, c),
      three(a, y, a, y, b), three(a, y, a, y, c), three(b, y, a, y, b), three(c, y, a, y, c)};
  return UniformSet(Alphabet(3), std::move(words));
}

}  // namespace unavoid
