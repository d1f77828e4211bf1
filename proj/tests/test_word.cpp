#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <sstream>

#include "doctest.h"
#include "unavoid/word.hpp"

using namespace unavoid;

namespace {

PartialWord W(const char* s) { return PartialWord::parse(s); }

PeriodicWord P3(const char* s) { return PeriodicWord(Alphabet(3), s); }

PartialWord random_word(std::mt19937& rng, int k, int len, double hole_prob) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> letter(0, k - 1);
  std::vector<std::int8_t> sym;
  for (int i = 0; i < len; ++i)
    sym.push_back(coin(rng) < hole_prob ? kHole : static_cast<std::int8_t>(letter(rng)));
  return PartialWord(std::move(sym));
}

}  // namespace

TEST_CASE("compatibility") {
  CHECK(compatible(W("aa-cb"), W("aa--b")));
  CHECK(compatible(W("---"), W("abc")));
  CHECK_FALSE(compatible(W("ab"), W("ac")));
  CHECK_THROWS_AS(compatible(W("ab"), W("abc")), std::invalid_argument);

  std::mt19937 rng(1);
  for (int i = 0; i < 200; ++i) {
    PartialWord u = random_word(rng, 3, 5, 0.4), v = random_word(rng, 3, 5, 0.4);
    CHECK(compatible(u, u));
    CHECK(compatible(u, v) == compatible(v, u));
    if (compatible(u, v) && v.total()) {
      // v is a completion of u: fill u's holes from v and compare.
      PartialWord filled = u;
      for (std::size_t p = 0; p < u.size(); ++p)
        if (!filled.defined(p)) filled = filled.strengthened(p, v.at(p));
      CHECK(filled == v);
    }
  }
}

TEST_CASE("strengthen and weaken") {
  CHECK(W("aa--b").strengthened(2, 2) == W("aac-b"));
  CHECK(W("aa--b").weakened(1) == W("a---b"));
  CHECK(W("aa--b").strengthened(3, 2) == W("aa-cb"));

  PartialWord u = W("aa--b");
  CHECK(u.weakened(0).strengthened(0, u.at(0)) == u);
  CHECK_THROWS_AS(u.strengthened(0, 1), std::invalid_argument);  // defined position
  CHECK_THROWS_AS(u.weakened(2), std::invalid_argument);         // hole
  CHECK_THROWS_AS(u.strengthened(9, 0), std::invalid_argument);

  CHECK(u.hole_count() == 2);
  CHECK(u.defined_count() == 3);
}

TEST_CASE("meets") {
  CHECK(meets(PeriodicWord(Alphabet(1), "a"), W("a--a")) == 0);
  CHECK_FALSE(meets(P3("aaacccbbb"), W("a--b")).has_value());
  CHECK_FALSE(meets(PeriodicWord(Alphabet(2), "ab"), W("a--a")).has_value());
  // Smallest offset is reported.
  CHECK(meets(P3("aab"), W("ab")) == 1);
  CHECK(meets(PeriodicWord(Alphabet(2), "abab"), W("ab")) == 0);
  // A word longer than the period wraps.
  CHECK(meets(PeriodicWord(Alphabet(2), "ab"), W("a-a-a-a")) == 0);
}

TEST_CASE("avoids_set") {
  UniformSet seventh(Alphabet(3), {W("a--a"), W("b--b"), W("c--c"), W("a--b"), W("c--a"), W("b--c")});
  CHECK(avoids_set(P3("aaacccbbb"), seventh));
  CHECK_FALSE(avoids_set(PeriodicWord(Alphabet(2), "a"), UniformSet(Alphabet(2), {W("a--a"), W("b--b"), W("a--b")})));
  CHECK(avoids_set(PeriodicWord(Alphabet(2), "aaabbb"), UniformSet(Alphabet(2), {W("a--a"), W("b--b")})));
}

TEST_CASE("build_x0") {
  UniformSet x0 = build_x0(2, 4);
  CHECK(x0.size() == 3);
  CHECK(x0.contains(W("a--a")));
  CHECK(x0.contains(W("b--b")));
  CHECK(x0.contains(W("a--b")));

  CHECK(build_x0(3, 5).size() == 6);
  CHECK(build_x0(1, 6).size() == 1);
  CHECK_THROWS_AS(build_x0(2, 1), std::invalid_argument);

  for (int k = 1; k <= 6; ++k)
    for (int m = 2; m <= 20; ++m)
      CHECK(static_cast<long long>(build_x0(k, m).size()) == k + k * (k - 1LL) / 2);
}

TEST_CASE("rename_letters") {
  UniformSet x0 = build_x0(2, 4);
  UniformSet swapped = rename_letters(x0, std::array{1, 0});
  CHECK(swapped.contains(W("b--b")));
  CHECK(swapped.contains(W("a--a")));
  CHECK(swapped.contains(W("b--a")));
  CHECK(rename_letters(x0, std::array{0, 1}) == x0);
  CHECK_THROWS_AS(rename_letters(x0, std::array{0, 0}), std::invalid_argument);

  // The second listed ternary set maps to one of its equivalents under a
  // cyclic renaming.
  UniformSet second(Alphabet(3), {W("a---a"), W("b---b"), W("c---c"), W("a---b"), W("a---c"), W("c---b")});
  UniformSet renamed = rename_letters(second, std::array{1, 2, 0});
  CHECK(renamed.contains(W("b---c")));
  CHECK(renamed.size() == 6);
}

TEST_CASE("meets survives weakening") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> mdist(2, 8), pdist(1, 12), kdist(2, 3);
  for (int i = 0; i < 300; ++i) {
    int k = kdist(rng);
    PartialWord u = random_word(rng, k, mdist(rng), 0.3);
    std::vector<std::int8_t> base;
    int p = pdist(rng);
    std::uniform_int_distribution<int> letter(0, k - 1);
    for (int j = 0; j < p; ++j) base.push_back(static_cast<std::int8_t>(letter(rng)));
    PeriodicWord w(Alphabet(k), std::move(base));
    if (!meets(w, u)) continue;
    if (u.defined_count() == 0) continue;
    std::vector<std::size_t> defined;
    for (std::size_t pos = 0; pos < u.size(); ++pos)
      if (u.defined(pos)) defined.push_back(pos);
    PartialWord weaker = u.weakened(defined[rng() % defined.size()]);
    CHECK(meets(w, weaker).has_value());
  }
}

TEST_CASE("avoidance is rotation and renaming invariant") {
  std::mt19937 rng(11);
  UniformSet x0 = build_x0(3, 4);
  for (int i = 0; i < 100; ++i) {
    std::vector<std::int8_t> base;
    std::uniform_int_distribution<int> letter(0, 2), pdist(1, 9);
    int p = pdist(rng);
    for (int j = 0; j < p; ++j) base.push_back(static_cast<std::int8_t>(letter(rng)));
    PeriodicWord w(Alphabet(3), std::move(base));
    bool a = avoids_set(w, x0);
    for (std::size_t r = 0; r < w.period(); ++r) CHECK(avoids_set(rotated(w, r), x0) == a);
    std::array<int, 3> perm{1, 2, 0};
    CHECK(avoids_set(rename_letters(w, perm), rename_letters(x0, perm)) == a);
  }
}

TEST_CASE("set file round trip") {
  std::istringstream in("# comment\nk=3\na--a\nb--b\n\na--b\n");
  UniformSet set = UniformSet::read(in);
  CHECK(set.alphabet().size() == 3);
  CHECK(set.size() == 3);

  std::ostringstream out;
  set.write(out);
  std::istringstream again(out.str());
  CHECK(UniformSet::read(again) == set);
}

TEST_CASE("set file errors") {
  std::istringstream beyond("k=2\nabc\n");
  CHECK_THROWS_AS(UniformSet::read(beyond), ParseError);
  std::istringstream badchar("a!b\n");
  CHECK_THROWS_AS(UniformSet::read(badchar), ParseError);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(UniformSet::read(empty), ParseError);
  std::istringstream late_header("ab\nk=2\n");
  CHECK_THROWS_AS(UniformSet::read(late_header), ParseError);

  std::istringstream inferred("ac\n");
  CHECK(UniformSet::read(inferred).alphabet().size() == 3);
}

TEST_CASE("trivial sets and word edges") {
  UniformSet holes(Alphabet(2), {W("--"), W("ab")});
  CHECK(holes.trivial());
  CHECK_FALSE(build_x0(2, 4).trivial());
  CHECK(W("").empty());
  CHECK(W("---").all_holes());
  CHECK(weakening_of_factor(W("-b"), W("abba")));
  CHECK_FALSE(weakening_of_factor(W("ca"), W("abba")));
  CHECK(is_weakening(W("a-"), W("ab")));
  CHECK_FALSE(is_weakening(W("ab"), W("ab"), /*strict=*/true));
}
