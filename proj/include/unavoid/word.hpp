// word.hpp -- partial-word algebra: alphabets, holes, compatibility,
// strengthening/weakening, and factor matching against periodic words.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace unavoid {

/// Symbol value marking an undefined position.
inline constexpr std::int8_t kHole = -1;

/// Parse failure carrying the 1-based source line that caused it.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg) : std::runtime_error(msg), line(line_) {}
};

/// The alphabet {a_1,...,a_k}, rendered as the first k letters 'a'..'z'.
class Alphabet {
 public:
  explicit Alphabet(int k) : k_(k) {
    if (k < 1 || k > 26) throw std::invalid_argument("alphabet size must be in [1,26]");
  }
  int size() const { return k_; }
  char letter(int index) const {
    if (index < 0 || index >= k_) throw std::invalid_argument("letter index out of range");
    return static_cast<char>('a' + index);
  }
  /// 'a'..'z' -> 0..25, anything else -> -1.
  static int index_of(char c) { return (c >= 'a' && c <= 'z') ? c - 'a' : -1; }
  bool operator==(const Alphabet&) const = default;

 private:
  int k_;
};

/// A finite sequence of letter indices and holes. Positions with a letter
/// form D(u); h(u) counts the holes. Immutable value type.
class PartialWord {
 public:
  PartialWord() = default;
  explicit PartialWord(std::vector<std::int8_t> symbols);

  /// Parse from text: 'a'..'z' are letters, '-' is a hole.
  static PartialWord parse(std::string_view text);

  std::size_t size() const { return sym_.size(); }
  bool empty() const { return sym_.empty(); }
  /// Letter index at position i, or kHole.
  int at(std::size_t i) const { return sym_[i]; }
  bool defined(std::size_t i) const { return sym_[i] >= 0; }
  std::size_t hole_count() const;
  std::size_t defined_count() const { return size() - hole_count(); }
  bool total() const { return hole_count() == 0; }
  bool all_holes() const { return defined_count() == 0; }
  /// Largest letter index used, or -1 if the word has no letters.
  int max_letter() const;

  std::string str() const;

  /// Fill the hole at pos with a letter.
  PartialWord strengthened(std::size_t pos, int letter) const;
  /// Replace the letter at pos with a hole.
  PartialWord weakened(std::size_t pos) const;
  PartialWord reversed() const;
  PartialWord factor(std::size_t pos, std::size_t len) const;

  const std::vector<std::int8_t>& symbols() const { return sym_; }
  bool operator==(const PartialWord&) const = default;
  bool operator<(const PartialWord& o) const { return sym_ < o.sym_; }

 private:
  std::vector<std::int8_t> sym_;
};

/// u and v agree on every position defined in both. Requires equal lengths;
/// a length mismatch is an error, distinct from incompatibility.
bool compatible(const PartialWord& u, const PartialWord& v);

/// y can be obtained from f by turning letters into holes (zero or more when
/// strict is false, at least one when strict is true). Requires |y| == |f|.
bool is_weakening(const PartialWord& y, const PartialWord& f, bool strict = false);

/// Some length-|y| factor of x has y as a weakening.
bool weakening_of_factor(const PartialWord& y, const PartialWord& x);

/// A total base word v standing for the two-sided infinite word v^Z.
class PeriodicWord {
 public:
  PeriodicWord(Alphabet alphabet, std::string_view base);
  PeriodicWord(Alphabet alphabet, std::vector<std::int8_t> base);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t period() const { return base_.size(); }
  /// Letter at a non-negative index of v^Z.
  int at(long long i) const { return base_[static_cast<std::size_t>(i % static_cast<long long>(base_.size()))]; }
  std::string str() const;
  const std::vector<std::int8_t>& base() const { return base_; }
  bool operator==(const PeriodicWord&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<std::int8_t> base_;
};

PeriodicWord rotated(const PeriodicWord& w, std::size_t r);
PeriodicWord rename_letters(const PeriodicWord& w, std::span<const int> perm);

/// A finite set of partial words over one alphabet. Words are kept sorted
/// and deduplicated; uniform_length is set when all lengths agree.
class UniformSet {
 public:
  UniformSet(Alphabet alphabet, std::vector<PartialWord> words);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<PartialWord>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  std::optional<std::size_t> uniform_length() const { return uniform_length_; }
  std::size_t max_length() const;
  bool contains(const PartialWord& w) const;
  /// Contains the empty word or a word of holes only (Prop.-1 sense).
  bool trivial() const;

  /// Parse the set file format: one word per line, '#' comments, blank lines
  /// ignored, optional "k=<int>" header before the first word.
  static UniformSet read(std::istream& in);
  void write(std::ostream& out) const;

  bool operator==(const UniformSet&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<PartialWord> words_;
  std::optional<std::size_t> uniform_length_;
};

/// Smallest i in [0, period) such that the length-|u| factor of w starting
/// at i is compatible with u; nullopt when w avoids u.
std::optional<std::size_t> meets(const PeriodicWord& w, const PartialWord& u);

/// True iff w meets no element of X.
bool avoids_set(const PeriodicWord& w, const UniformSet& X);

/// T0 u T0': the k same-endpoint words a_i<holes>a_i plus the C(k,2)
/// distinct-endpoint words a_i<holes>a_j (i < j), all of length m >= 2.
UniformSet build_x0(int k, int m);

/// Apply a letter permutation to every word; holes are fixed.
UniformSet rename_letters(const UniformSet& X, std::span<const int> perm);

/// Word with the given letters separated by runs of holes:
/// letters[0] <gaps[0] holes> letters[1] ... letters[n].
PartialWord spaced_word(std::span<const int> letters, std::span<const int> gaps);

}  // namespace unavoid
