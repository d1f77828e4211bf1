#include "unavoid/word.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace unavoid {

PartialWord::PartialWord(std::vector<std::int8_t> symbols) : sym_(std::move(symbols)) {
  for (std::int8_t s : sym_)
    if (s < -1 || s > 25) throw std::invalid_argument("symbol out of range");
}

PartialWord PartialWord::parse(std::string_view text) {
  std::vector<std::int8_t> sym;
  sym.reserve(text.size());
  for (char c : text) {
    if (c == '-') {
      sym.push_back(kHole);
    } else {
      int idx = Alphabet::index_of(c);
      if (idx < 0) throw std::invalid_argument(std::string("bad character '") + c + "' in word");
      sym.push_back(static_cast<std::int8_t>(idx));
    }
  }
  return PartialWord(std::move(sym));
}

std::size_t PartialWord::hole_count() const {
  return static_cast<std::size_t>(std::count(sym_.begin(), sym_.end(), kHole));
}

int PartialWord::max_letter() const {
  int mx = -1;
  for (std::int8_t s : sym_) mx = std::max(mx, static_cast<int>(s));
  return mx;
}

std::string PartialWord::str() const {
  std::string out;
  out.reserve(sym_.size());
  for (std::int8_t s : sym_) out.push_back(s < 0 ? '-' : static_cast<char>('a' + s));
  return out;
}

PartialWord PartialWord::strengthened(std::size_t pos, int letter) const {
  if (pos >= size()) throw std::invalid_argument("strengthen: position out of range");
  if (defined(pos)) throw std::invalid_argument("strengthen: position is already defined");
  if (letter < 0 || letter > 25) throw std::invalid_argument("strengthen: bad letter");
  auto sym = sym_;
  sym[pos] = static_cast<std::int8_t>(letter);
  return PartialWord(std::move(sym));
}

PartialWord PartialWord::weakened(std::size_t pos) const {
  if (pos >= size()) throw std::invalid_argument("weaken: position out of range");
  if (!defined(pos)) throw std::invalid_argument("weaken: position is a hole");
  auto sym = sym_;
  sym[pos] = kHole;
  return PartialWord(std::move(sym));
}

PartialWord PartialWord::reversed() const {
  auto sym = sym_;
  std::reverse(sym.begin(), sym.end());
  return PartialWord(std::move(sym));
}

PartialWord PartialWord::factor(std::size_t pos, std::size_t len) const {
  if (pos + len > size()) throw std::invalid_argument("factor: out of range");
  return PartialWord(std::vector<std::int8_t>(sym_.begin() + static_cast<long>(pos),
                                              sym_.begin() + static_cast<long>(pos + len)));
}

bool compatible(const PartialWord& u, const PartialWord& v) {
  if (u.size() != v.size()) throw std::invalid_argument("compatible: length mismatch");
  for (std::size_t i = 0; i < u.size(); ++i) {
    int a = u.at(i), b = v.at(i);
    if (a >= 0 && b >= 0 && a != b) return false;
  }
  return true;
}

bool is_weakening(const PartialWord& y, const PartialWord& f, bool strict) {
  if (y.size() != f.size()) throw std::invalid_argument("is_weakening: length mismatch");
  bool weaker_somewhere = false;
  for (std::size_t i = 0; i < y.size(); ++i) {
    int a = y.at(i), b = f.at(i);
    if (a >= 0) {
      if (a != b) return false;
    } else if (b >= 0) {
      weaker_somewhere = true;
    }
  }
  return strict ? weaker_somewhere : true;
}

bool weakening_of_factor(const PartialWord& y, const PartialWord& x) {
  if (y.size() > x.size()) return false;
  for (std::size_t i = 0; i + y.size() <= x.size(); ++i)
    if (is_weakening(y, x.factor(i, y.size()))) return true;
  return false;
}

PeriodicWord::PeriodicWord(Alphabet alphabet, std::string_view base)
    : PeriodicWord(alphabet, PartialWord::parse(base).symbols()) {}

PeriodicWord::PeriodicWord(Alphabet alphabet, std::vector<std::int8_t> base)
    : alphabet_(alphabet), base_(std::move(base)) {
  if (base_.empty()) throw std::invalid_argument("periodic word: empty base");
  for (std::int8_t s : base_) {
    if (s < 0) throw std::invalid_argument("periodic word: base must be total");
    if (s >= alphabet_.size()) throw std::invalid_argument("periodic word: letter not in alphabet");
  }
}

std::string PeriodicWord::str() const {
  std::string out;
  out.reserve(base_.size());
  for (std::int8_t s : base_) out.push_back(static_cast<char>('a' + s));
  return out;
}

PeriodicWord rotated(const PeriodicWord& w, std::size_t r) {
  const auto& b = w.base();
  r %= b.size();
  std::vector<std::int8_t> out(b.begin() + static_cast<long>(r), b.end());
  out.insert(out.end(), b.begin(), b.begin() + static_cast<long>(r));
  return PeriodicWord(w.alphabet(), std::move(out));
}

namespace {

void check_permutation(std::span<const int> perm, int k) {
  if (static_cast<int>(perm.size()) != k) throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  for (int v : perm) {
    if (v < 0 || v >= k || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of the alphabet");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

}  // namespace

PeriodicWord rename_letters(const PeriodicWord& w, std::span<const int> perm) {
  check_permutation(perm, w.alphabet().size());
  std::vector<std::int8_t> out(w.base());
  for (auto& s : out) s = static_cast<std::int8_t>(perm[static_cast<std::size_t>(s)]);
  return PeriodicWord(w.alphabet(), std::move(out));
}

UniformSet::UniformSet(Alphabet alphabet, std::vector<PartialWord> words)
    : alphabet_(alphabet), words_(std::move(words)) {
  if (words_.empty()) throw std::invalid_argument("set must be non-empty");
  for (const auto& w : words_)
    if (w.max_letter() >= alphabet_.size())
      throw std::invalid_argument("word uses a letter outside the alphabet");
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  std::size_t len = words_.front().size();
  bool uniform = std::all_of(words_.begin(), words_.end(),
                             [&](const PartialWord& w) { return w.size() == len; });
  if (uniform) uniform_length_ = len;
}

std::size_t UniformSet::max_length() const {
  std::size_t mx = 0;
  for (const auto& w : words_) mx = std::max(mx, w.size());
  return mx;
}

bool UniformSet::contains(const PartialWord& w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

bool UniformSet::trivial() const {
  for (const auto& w : words_)
    if (w.all_holes()) return true;
  return false;
}

UniformSet UniformSet::read(std::istream& in) {
  std::vector<PartialWord> words;
  std::optional<int> header_k;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t");
    std::string body = line.substr(start, end - start + 1);
    if (body[0] == '#') continue;
    if (body.rfind("k=", 0) == 0) {
      if (!words.empty()) throw ParseError(lineno, "k= header must precede the words");
      if (header_k) throw ParseError(lineno, "duplicate k= header");
      try {
        header_k = std::stoi(body.substr(2));
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad k= header");
      }
      if (*header_k < 1 || *header_k > 26) throw ParseError(lineno, "k out of range [1,26]");
      continue;
    }
    try {
      words.push_back(PartialWord::parse(body));
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (words.empty()) throw ParseError(lineno, "no words in set file");
  int max_letter = -1;
  for (const auto& w : words) max_letter = std::max(max_letter, w.max_letter());
  int k = header_k.value_or(std::max(1, max_letter + 1));
  if (max_letter >= k)
    throw ParseError(lineno, "word uses letter '" + std::string(1, static_cast<char>('a' + max_letter)) +
                                 "' beyond alphabet k=" + std::to_string(k));
  return UniformSet(Alphabet(k), std::move(words));
}

void UniformSet::write(std::ostream& out) const {
  out << "k=" << alphabet_.size() << '\n';
  for (const auto& w : words_) out << w.str() << '\n';
}

std::optional<std::size_t> meets(const PeriodicWord& w, const PartialWord& u) {
  if (u.max_letter() >= w.alphabet().size())
    throw std::invalid_argument("meets: word uses a letter outside the alphabet");
  const std::size_t p = w.period();
  if (u.empty()) return 0;
  std::vector<std::pair<std::size_t, int>> defined;
  defined.reserve(u.size());
  for (std::size_t j = 0; j < u.size(); ++j)
    if (u.defined(j)) defined.emplace_back(j, u.at(j));
  const auto& base = w.base();
  for (std::size_t i = 0; i < p; ++i) {
    bool ok = true;
    for (auto [j, letter] : defined) {
      if (base[(i + j) % p] != letter) {
        ok = false;
        break;
      }
    }
    if (ok) return i;
  }
  return std::nullopt;
}

bool avoids_set(const PeriodicWord& w, const UniformSet& X) {
  if (!(w.alphabet() == X.alphabet()))
    throw std::invalid_argument("avoids_set: alphabet mismatch");
  for (const auto& u : X.words())
    if (meets(w, u)) return false;
  return true;
}

UniformSet build_x0(int k, int m) {
  if (m < 2) throw std::invalid_argument("build_x0: m must be at least 2");
  Alphabet a(k);
  std::vector<PartialWord> words;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      std::vector<std::int8_t> sym(static_cast<std::size_t>(m), kHole);
      sym.front() = static_cast<std::int8_t>(i);
      sym.back() = static_cast<std::int8_t>(j);
      words.emplace_back(std::move(sym));
    }
  return UniformSet(a, std::move(words));
}

UniformSet rename_letters(const UniformSet& X, std::span<const int> perm) {
  check_permutation(perm, X.alphabet().size());
  std::vector<PartialWord> words;
  words.reserve(X.size());
  for (const auto& w : X.words()) {
    auto sym = w.symbols();
    for (auto& s : sym)
      if (s >= 0) s = static_cast<std::int8_t>(perm[static_cast<std::size_t>(s)]);
    words.emplace_back(std::move(sym));
  }
  return UniformSet(X.alphabet(), std::move(words));
}

PartialWord spaced_word(std::span<const int> letters, std::span<const int> gaps) {
  if (letters.size() != gaps.size() + 1) throw std::invalid_argument("spaced_word: arity mismatch");
  std::vector<std::int8_t> sym;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0) {
      if (gaps[i - 1] < 0) throw std::invalid_argument("spaced_word: negative gap");
      sym.insert(sym.end(), static_cast<std::size_t>(gaps[i - 1]), kHole);
    }
    sym.push_back(static_cast<std::int8_t>(letters[i]));
  }
  return PartialWord(std::move(sym));
}

}  // namespace unavoid
