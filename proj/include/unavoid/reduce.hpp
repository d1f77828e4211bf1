// reduce.hpp -- the four avoidability-preserving set operations, plus the
// derived nine-word set used for the y1 = y2 unavoidability argument.
#pragma once

#include <string>
#include <vector>

#include "unavoid/word.hpp"

namespace unavoid {

struct TraceStep {
  std::string op;
  std::vector<PartialWord> removed;
  std::vector<PartialWord> added;
};

/// Audit trail: replaying the steps from the input set yields the output.
struct ReductionTrace {
  std::vector<TraceStep> steps;
};

UniformSet apply_trace(const UniformSet& start, const ReductionTrace& trace);

/// Remove every word that has another member as a weakening of one of its
/// factors, to fixpoint.
UniformSet factoring(const UniformSet& X, ReductionTrace* trace = nullptr);

/// Replace x = y.a by y when every letter b has a witness: a suffix z of y
/// and a member v that is a strict weakening of z.b. With allow_self_witness,
/// x itself may serve as v while it is still in the set.
UniformSet prefix_suffix(const UniformSet& X, const PartialWord& x,
                         bool allow_self_witness = true, ReductionTrace* trace = nullptr);

/// Strip leading and trailing hole blocks from every word (the trailing case
/// is the printed rule; the leading case goes through reversal), to fixpoint.
UniformSet hole_truncation(const UniformSet& X, ReductionTrace* trace = nullptr);

/// Replace x by all fillings of the selected holes with letters.
UniformSet expand(const UniformSet& X, const PartialWord& x,
                  const std::vector<std::size_t>& positions, ReductionTrace* trace = nullptr);

/// The nine-word set over {a,b,c} with the same avoidability as the
/// three-interior-a instance at m = 2y+3 with equal b-side gaps.
UniformSet derive_prop_iff_y(int m, int x1, int y);

}  // namespace unavoid
