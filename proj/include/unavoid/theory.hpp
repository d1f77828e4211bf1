// theory.hpp -- closed-form predicates, number-theoretic utilities, and the
// parameterized set families they speak about.
#pragma once

#include <optional>
#include <utility>

#include "unavoid/decide.hpp"
#include "unavoid/word.hpp"

namespace unavoid {

/// q = nu_p(n): p^q divides n, p^(q+1) does not.
int nu(long long p, long long n);

struct Valuation {
  long long p;
  long long n;
  int q;
  static Valuation of(long long p, long long n) { return {p, n, nu(p, n)}; }
};

/// k + C(k,2): no smaller non-trivial m-uniform set over k letters is
/// unavoidable.
long long min_size_bound(int k);

/// m-1 for even m, m for odd m: the most holes fillable in a minimal
/// m-uniform unavoidable set.
int max_fill(int m);

struct HoleBound {
  long long h;
  int fill;
  bool conditional_on_conjecture;  // true for k >= 3
};

/// H = (k + C(k,2))(m-2) - max_fill(m).
HoleBound holes_bound(int k, int m);

/// One ternary instance with the two shared-endpoint fills: gaps (x1, x2)
/// around the inserted b in the a..b word, (y1, y2) around the inserted b in
/// the b..c word, x1+x2 = y1+y2 = m-3.
struct ConjectureInstance {
  int m;
  int x1;
  int y1;

  ConjectureInstance(int m_, int x1_, int y1_);
  int x2() const { return m - 3 - x1; }
  int y2() const { return m - 3 - y1; }
  bool in_conjecture_region() const { return y1 <= x2() && x2() <= x1 && x1 <= y2(); }
  /// T0 u {a<x1>b<x2>b, b<y1>b<y2>c, a<m-2>c} over {a,b,c}.
  UniformSet set() const;
  bool operator==(const ConjectureInstance&) const = default;
};

/// Same parameter frame for the all-a / b-to-c-pair variant.
struct Eq2Instance {
  int m;
  int x1;
  int y1;

  Eq2Instance(int m_, int x1_, int y1_);
  int x2() const { return m - 3 - x1; }
  int y2() const { return m - 3 - y1; }
  /// {a<x1>a<x2>a, b<y1>c<y2>c} plus the untouched X0 words.
  UniformSet set() const;
  bool operator==(const Eq2Instance&) const = default;
};

// --- filling T0 -----------------------------------------------------------

/// variant 1: the a..a word refilled with interior a's at the given gaps
/// (unavoidable); variant 2: one interior b at gaps (x1, x2) (avoidable).
UniformSet prop2_sets(int m, int variant, std::span<const int> splits);

/// Avoidable iff m is odd and nu2(x1_a+1) = nu2(y1_b+1) < nu2(m-1), for the
/// set with interior a in the a-word (first gap x1_a) and interior b in the
/// b-word (first gap y1_b).
bool prop3_avoidable(int m, int x1_a, int y1_b);
UniformSet prop3_set(int m, int x1_a, int y1_b);

/// All three T0 words refilled with their own letter: always avoidable.
UniformSet prop4_sets(int m, std::pair<int, int> x_splits, std::pair<int, int> y_splits,
                      std::pair<int, int> z_splits);

// --- filling T0' ----------------------------------------------------------

enum class Algo1Case { CIntoAC, AIntoAC };

UniformSet algo1_set(int m, int x1, Algo1Case which);

/// In the divisible case returns the displayed periodic avoider (verified);
/// in the non-divisible case the set is avoidable by other means and the
/// result is empty.
std::optional<PeriodicWord> prop_algo1_avoider(int m, int x1, Algo1Case which);

/// Cases 1..4 fill one hole in a..b or b..c with an endpoint letter; the set
/// is unavoidable iff nu2(split+1) <= nu2(m-1), split = x1 in cases 1 and 4,
/// x2 in cases 2 and 3.
bool prop_harder_unavoidable(int case_id, int m, int split);
UniformSet harder_set(int case_id, int m, int x1);

/// Two fills in the same a..b word, reduced to the binary alphabet:
/// {a<m-2>a, b<m-2>b, a<x1>b<x2>b<x3>b}, x1+x2+x3 = m-4.
bool thm_2bottom_unavoidable(int m, int x1, int x2, int x3);
UniformSet thm_2bottom_set(int m, int x1, int x2, int x3);

/// The avoidability-equal partner instance: (x1, x2, y1, y2) -> (y2, y1, x2, x1).
ConjectureInstance prop_x1y2_partner(const ConjectureInstance& inst);

/// (a^p c^q b^p)^Z with q = floor((m-1)/2), p = ceil((m-1)/2); requires
/// x1 <= x2 and x1 <= y2; the result is asserted to avoid the set.
PeriodicWord prop_avoidingword_certificate(const ConjectureInstance& inst);

/// True when (x1, y1 even and y1 <= x2 <= x1) or (y1 = 0 and x2 <= x1);
/// such instances are avoided by a word of period at most m.
bool prop_eveneven_applicable(const ConjectureInstance& inst);

/// Sufficient condition for unavoidability of the y1 = y2 all-a instance:
/// nu2(x1+1) != nu2(y+1). Requires m = 2y+3. False means no claim.
bool prop_iff_unavoidable(int m, int x1, int y);

/// Y2' of the same argument: {a<x1>a<x2>a, b<y2>b<y1>c} plus the rest of X0.
UniformSet prop_iff_y2prime_set(int m, int x1, int y1);

// --- larger alphabets -----------------------------------------------------

/// Fills in two endpoint-disjoint T0' words over four letters.
UniformSet bottomfour_set(int k, int m, int x1, int x2, int y1, int y2);

/// The case-driven periodic avoider for bottomfour_set (k >= 4), verified.
PeriodicWord prop_bottomfour_avoider(int k, int m, int x1, int x2, int y1, int y2);

/// One interior fill in a_i<m-2>a_{i+p} with p >= 2 (1-based letters);
/// decides the resulting set and asserts avoidability.
Verdict prop_bottomendpoints_check(int k, int m, int i, int p, int gap, int fill_letter);
UniformSet bottomendpoints_set(int k, int m, int i, int p, int gap, int fill_letter);

// --- switcharound sets (section on two T0'-word fills) ---------------------

UniformSet switcharound_x2prime(const ConjectureInstance& inst);
UniformSet switcharound_y2prime(const ConjectureInstance& inst);
UniformSet switcharound_y2(const ConjectureInstance& inst);

}  // namespace unavoid
