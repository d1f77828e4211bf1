// sweep.hpp -- enumerate the conjecture-region instances, decide each with
// period < 2m, classify by pattern coverage, and persist resumable records.
#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "unavoid/patterns.hpp"

namespace unavoid {

struct SweepRecord {
  int m, x1, y1;
  bool avoidable;
  int period;               // 0 when unknown
  std::string certificate;  // empty when unknown
  std::vector<std::string> families;
  long long millis;
};

struct SweepReport {
  int m_lo = 0, m_hi = 0;
  long long total = 0;
  long long avoidable = 0;
  long long unknown = 0;
  std::vector<std::array<int, 3>> uncovered;  // avoidable but matched no family
  std::vector<std::array<int, 3>> unknown_instances;
};

/// Every (m, x1, y1) with y1 <= x2 <= x1 <= y2, ordered by (m, x1, y1).
/// The range convention starts at m = 3 so that the m <= 100 run counts
/// 41,650 instances.
std::vector<ConjectureInstance> enumerate_instances(int m_lo, int m_hi);

struct SweepOptions {
  int m_lo = 3;
  int m_hi = 100;
  std::string out_path;
  bool resume = false;
  int jobs = 1;
};

/// Decide every instance (pattern match first, bounded-period search with
/// p_max = 2m-1 otherwise) and write one checksummed record per instance in
/// canonical order. Resume keeps verified existing records byte-identical.
SweepReport run_sweep(const SweepOptions& opts, std::ostream* progress = nullptr);

/// Recompute counts from a records file, validating every line checksum and
/// re-verifying a deterministic sample of the certificates.
SweepReport summarize(const std::string& records_path, double sample_fraction = 0.01);

/// Line checksum over the tab-joined fields before millis.
std::string sweep_line_checksum(const std::string& fields);

inline constexpr const char* kToolVersion = "unavoid 0.1.0";

}  // namespace unavoid
