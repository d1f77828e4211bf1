// decide.hpp -- avoidability decisions: exact via the factor-window graph,
// semi-decision via bounded-period constraint search.
#pragma once

#include <optional>
#include <string>

#include "unavoid/word.hpp"

namespace unavoid {

struct WindowGraphConfig {
  long long max_nodes = 1LL << 24;
};

/// Raised when the window graph would exceed the node cap.
struct WindowCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Method { WindowGraph, PeriodSearch, Pattern, TheoremRef };

const char* method_name(Method m);

/// Outcome of a decision. Avoidable verdicts always carry a certificate
/// that is re-verified against the set at construction; Unavoidable with
/// method WindowGraph comes only from the exact decider.
struct Verdict {
  enum class Kind { Avoidable, Unavoidable, Unknown };

  Kind kind;
  std::optional<PeriodicWord> certificate;
  Method method = Method::TheoremRef;
  std::string theorem;            // set when method == TheoremRef
  long long period_bound_tried = 0;  // set for Unknown

  bool avoidable() const { return kind == Kind::Avoidable; }
  bool unavoidable() const { return kind == Kind::Unavoidable; }
  bool unknown() const { return kind == Kind::Unknown; }

  static Verdict make_avoidable(PeriodicWord cert, Method how, const UniformSet& against);
  static Verdict window_unavoidable();
  static Verdict theorem_unavoidable(std::string name);
  static Verdict make_unknown(long long bound_tried);

  std::string str() const;
};

bool window_fits(const UniformSet& X, const WindowGraphConfig& cfg);

/// Exact decision by cycle search in the graph on total windows of length
/// L-1 (L = longest word). Throws WindowCapExceeded when k^(L-1) exceeds
/// the cap. Never returns Unknown.
Verdict decide_exact(const UniformSet& X, const WindowGraphConfig& cfg = {});

/// Search periods p = 1..p_max for a base word whose power avoids X.
/// Returns Avoidable with the first word found, else Unknown{p_max}.
Verdict decide_bounded_period(const UniformSet& X, long long p_max);

/// Policy: exact when the window graph fits the cap, bounded search
/// otherwise. Unavoidable can only come from the exact path.
Verdict decide(const UniformSet& X, long long p_max, const WindowGraphConfig& cfg = {});

}  // namespace unavoid
