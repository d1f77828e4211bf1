#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "unavoid/theory.hpp"
#include "unavoid/verify.hpp"

using namespace unavoid;

namespace {
PartialWord W(const char* s) { return PartialWord::parse(s); }
}  // namespace

TEST_CASE("valuations") {
  CHECK(nu(2, 8) == 3);
  CHECK(nu(2, 7) == 0);
  CHECK(nu(3, 18) == 2);
  CHECK_THROWS_AS(nu(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(nu(2, 0), std::invalid_argument);
  Valuation v = Valuation::of(2, 24);
  CHECK(v.q == 3);
}

TEST_CASE("min_size_bound and hole formulas") {
  CHECK(min_size_bound(2) == 3);
  CHECK(min_size_bound(3) == 6);
  CHECK(min_size_bound(1) == 1);

  CHECK(holes_bound(2, 6).h == 7);   // 2m-5 for even m
  CHECK(holes_bound(2, 5).h == 4);   // 2m-6 for odd m
  CHECK(holes_bound(3, 7).h == 23);
  CHECK(holes_bound(3, 7).conditional_on_conjecture);
  CHECK_FALSE(holes_bound(2, 6).conditional_on_conjecture);

  CHECK(max_fill(6) == 5);
  CHECK(max_fill(5) == 5);
  CHECK(max_fill(4) == 3);
  for (int m = 4; m <= 100; ++m) CHECK(max_fill(m) == (m % 2 == 0 ? m - 1 : m));
  CHECK_THROWS_AS(max_fill(3), std::invalid_argument);
}

TEST_CASE("prop3 predicate") {
  CHECK(prop3_avoidable(9, 1, 1));
  CHECK_FALSE(prop3_avoidable(8, 1, 1));
  CHECK_FALSE(prop3_avoidable(9, 1, 3));
  UniformSet s = prop3_set(9, 1, 1);
  CHECK(s.contains(W("a-a-----a")));
  CHECK(s.contains(W("b-b-----b")));
  CHECK(s.size() == 6);
}

TEST_CASE("harder predicate") {
  CHECK(prop_harder_unavoidable(1, 9, 3));
  CHECK_FALSE(prop_harder_unavoidable(1, 8, 3));
  CHECK(prop_harder_unavoidable(3, 5, 1));
  CHECK_THROWS_AS(prop_harder_unavoidable(5, 9, 1), std::invalid_argument);
  CHECK(harder_set(1, 6, 1).contains(W("a-b--b")));
  CHECK(harder_set(2, 6, 1).contains(W("a-a--b")));
  CHECK(harder_set(3, 6, 1).contains(W("b-b--c")));
  CHECK(harder_set(4, 6, 1).contains(W("b-c--c")));
}

TEST_CASE("2bottom predicate") {
  CHECK_FALSE(thm_2bottom_unavoidable(8, 1, 1, 2));
  CHECK(thm_2bottom_unavoidable(9, 1, 1, 3));
  CHECK(thm_2bottom_unavoidable(15, 1, 3, 7));
  CHECK_THROWS_AS(thm_2bottom_unavoidable(9, 1, 1, 1), std::invalid_argument);
  UniformSet y = thm_2bottom_set(9, 1, 1, 3);
  CHECK(y.alphabet().size() == 2);
  CHECK(y.contains(W("a-b-b---b")));
}

TEST_CASE("x1y2 partner") {
  ConjectureInstance inst(7, 1, 2);
  ConjectureInstance partner = prop_x1y2_partner(inst);
  CHECK(partner.x1 == 2);
  CHECK(partner.y1 == 3);
  CHECK(prop_x1y2_partner(partner) == inst);
  // The partner's set is the displayed one.
  CHECK(partner.set().contains(W("a--b--b")));
  CHECK(partner.set().contains(W("b---b-c")));
}

TEST_CASE("avoidingword certificate") {
  ConjectureInstance a(9, 1, 2);
  PeriodicWord w = prop_avoidingword_certificate(a);
  CHECK(w.str() == "aaaaacccbbbbb");
  CHECK(avoids_set(w, a.set()));

  ConjectureInstance b(5, 1, 1);
  CHECK(prop_avoidingword_certificate(b).str() == "aaccbb");

  ConjectureInstance bad(9, 5, 1);  // x1 > x2
  CHECK_THROWS_AS(prop_avoidingword_certificate(bad), std::invalid_argument);
  ConjectureInstance infeasible(9, 2, 1);  // x1 > y1: no block split works
  CHECK_THROWS_AS(prop_avoidingword_certificate(infeasible), std::invalid_argument);
}

TEST_CASE("eveneven condition") {
  CHECK(prop_eveneven_applicable(ConjectureInstance(9, 4, 2)));
  CHECK(prop_eveneven_applicable(ConjectureInstance(8, 3, 0)));
  CHECK_FALSE(prop_eveneven_applicable(ConjectureInstance(9, 3, 2)));
}

TEST_CASE("prop_iff condition") {
  CHECK(prop_iff_unavoidable(5, 0, 1));
  CHECK_FALSE(prop_iff_unavoidable(5, 1, 1));
  CHECK(prop_iff_unavoidable(9, 1, 3));
  CHECK_THROWS_AS(prop_iff_unavoidable(8, 1, 3), std::invalid_argument);
}

TEST_CASE("instance builders") {
  ConjectureInstance inst(12, 6, 3);
  CHECK(inst.x2() == 3);
  CHECK(inst.y2() == 6);
  CHECK(inst.in_conjecture_region());
  UniformSet set = inst.set();
  CHECK(set.size() == 6);
  CHECK(set.contains(W("a------b---b")));
  CHECK(set.contains(W("b---b------c")));
  CHECK(set.contains(W("a----------c")));
  CHECK_FALSE(ConjectureInstance(9, 1, 1).in_conjecture_region());
  CHECK_THROWS_AS(ConjectureInstance(5, 9, 0), std::invalid_argument);

  Eq2Instance e2(5, 0, 1);
  UniformSet s2 = e2.set();
  CHECK(s2.contains(W("aa--a")));
  CHECK(s2.contains(W("b-c-c")));
  CHECK(s2.contains(W("b---b")));
  CHECK(s2.size() == 6);
}

TEST_CASE("prop2 builders") {
  UniformSet v1 = prop2_sets(6, 1, std::array{1, 2});
  CHECK(v1.contains(W("a-a--a")));
  UniformSet v2 = prop2_sets(6, 2, std::array{1, 2});
  CHECK(v2.contains(W("a-b--a")));
  UniformSet q0 = prop2_sets(6, 1, std::array{4});
  CHECK(q0 == build_x0(3, 6));
  CHECK_THROWS_AS(prop2_sets(6, 1, std::array{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(prop2_sets(6, 3, std::array{1, 2}), std::invalid_argument);
}

TEST_CASE("algo1") {
  // x2+1 = 5 not divisible by x1+1 = 2: avoidable by other means.
  CHECK_FALSE(prop_algo1_avoider(8, 1, Algo1Case::CIntoAC).has_value());
  // Divisible: the displayed word.
  auto w = prop_algo1_avoider(9, 1, Algo1Case::CIntoAC);
  REQUIRE(w.has_value());
  CHECK(w->str() == "aabbbbbbccaaaaaabbcccccc");
  // a-into-ac at m=9, x1=4: x1+1 = 5 not divisible by x2+1 = 3.
  CHECK_FALSE(prop_algo1_avoider(9, 4, Algo1Case::AIntoAC).has_value());
  auto w2 = prop_algo1_avoider(7, 3, Algo1Case::AIntoAC);  // 4 divisible by 2
  REQUIRE(w2.has_value());
  CHECK(w2->str() == "aaaabbcccc");
}

TEST_CASE("bottomfour") {
  PeriodicWord w1 = prop_bottomfour_avoider(4, 7, 1, 3, 2, 2);
  CHECK(avoids_set(w1, bottomfour_set(4, 7, 1, 3, 2, 2)));
  PeriodicWord w2 = prop_bottomfour_avoider(4, 7, 3, 1, 2, 2);
  CHECK(avoids_set(w2, bottomfour_set(4, 7, 3, 1, 2, 2)));
  CHECK_THROWS_AS(bottomfour_set(3, 7, 1, 3, 2, 2), std::invalid_argument);
}

TEST_CASE("bottomendpoints") {
  CHECK(prop_bottomendpoints_check(3, 6, 1, 2, 1, 0).avoidable());
  CHECK(prop_bottomendpoints_check(4, 6, 1, 3, 1, 0).avoidable());
  CHECK_THROWS_AS(bottomendpoints_set(3, 6, 1, 1, 1, 0), std::invalid_argument);  // p < 2
}

TEST_CASE("theory suites at small scale") {
  for (const char* suite : {"prop3", "harder", "2bottom", "iff"}) {
    auto r = verify::run_suite(suite, 8);
    INFO(r.suite, ": ", r.failure);
    CHECK(r.pass);
  }
  for (const char* suite : {"x1y2", "switcharound", "topsamedistinct", "three"}) {
    auto r = verify::run_suite(suite, 6);
    INFO(r.suite, ": ", r.failure);
    CHECK(r.pass);
  }
  for (const char* suite : {"algo1", "bottomfour", "bottomendpoints", "preamble"}) {
    auto r = verify::run_suite(suite, 6);
    INFO(r.suite, ": ", r.failure);
    CHECK(r.pass);
  }
  auto ly = verify::run_suite("lastyearswitcharound", 7);
  INFO(ly.failure);
  CHECK(ly.pass);
  auto av = verify::run_suite("avoidingword", 16);
  INFO(av.failure);
  CHECK(av.pass);
  auto ee = verify::run_suite("eveneven", 12);
  INFO(ee.failure);
  CHECK(ee.pass);
  auto mr = verify::run_suite("mainresult-smallm", 5);
  INFO(mr.failure);
  CHECK(mr.pass);
}
