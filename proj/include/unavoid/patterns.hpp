// patterns.hpp -- the catalog of avoiding-word families: residue conditions,
// word constructors, matching, and the per-row soundness audit hooks.
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "unavoid/theory.hpp"

namespace unavoid {

enum class Strength { Iff, Sufficient };
enum class TargetEq { Eq1, Eq2 };

struct FamilyMatch {
  std::string family;
  std::vector<int> params;
  PeriodicWord word;
  std::string params_str() const;
};

/// One catalog row: a condition over (m, x1, y1) and word parameters, and a
/// constructor for the corresponding periodic word. Quarantined rows stay in
/// the registry but are excluded from matching.
class PatternFamily {
 public:
  PatternFamily(std::string id, Strength strength, TargetEq target,
                std::vector<std::string> param_names, bool quarantined = false)
      : id_(std::move(id)),
        strength_(strength),
        target_(target),
        param_names_(std::move(param_names)),
        quarantined_(quarantined) {}
  virtual ~PatternFamily() = default;

  const std::string& id() const { return id_; }
  Strength strength() const { return strength_; }
  TargetEq target() const { return target_; }
  bool quarantined() const { return quarantined_; }
  const std::vector<std::string>& param_names() const { return param_names_; }

  /// First satisfying parameter tuple (scan order is fixed per row) with the
  /// row modulus at most modulus_bound, or nothing.
  virtual std::optional<FamilyMatch> match(int m, int x1, int y1, int modulus_bound) const = 0;

  /// Check this row on one instance: returns a description of the violation
  /// when some satisfying tuple's word fails to avoid the set (or, for
  /// existential rows, when the condition holds but no member word avoids).
  virtual std::optional<std::string> audit_instance(int m, int x1, int y1,
                                                    int modulus_bound) const = 0;

  /// Visit every tuple in the scan domain with its word and the condition's
  /// value at this instance (congruence rows only; others visit nothing).
  /// Lets the converse of an iff row be checked against avoids_set.
  virtual void scan_all(int m, int x1, int y1, int modulus_bound,
                        const std::function<void(const FamilyMatch&, bool)>& fn) const {
    (void)m, (void)x1, (void)y1, (void)modulus_bound, (void)fn;
  }

 private:
  std::string id_;
  Strength strength_;
  TargetEq target_;
  std::vector<std::string> param_names_;
  bool quarantined_;
};

struct RegistryOptions {
  /// Include the two residue-table rows whose printed conditions are
  /// ambiguous ("=" entries); off by default.
  bool enable_ambiguous_mod3 = false;
  /// Use the as-printed congruences for the four rows the soundness audit
  /// refutes (they come back quarantined). The default matches those rows by
  /// their defining contract instead: scan the family's parameter domain and
  /// keep a tuple only when its word verifiably avoids the set.
  bool printed_conditions_for_refuted_rows = false;
};

/// All catalog rows, in table order, plus the two search-backed rows derived
/// from the avoidability propositions. Immutable after first construction.
const std::vector<std::unique_ptr<PatternFamily>>& registry();
std::vector<std::unique_ptr<PatternFamily>> make_registry(const RegistryOptions& opts);

/// Stable fingerprint of row ids and quarantine flags (sweep file header).
std::string registry_fingerprint();

struct MatchReport {
  int m, x1, y1;
  TargetEq target;
  bool in_region;
  std::vector<FamilyMatch> matches;
  bool uncovered() const { return matches.empty(); }
};

/// Evaluate the catalog against one instance. modulus_bound < 0 selects the
/// calibrated default m-1. With first_only, stop at the first matching row.
MatchReport match_families(const ConjectureInstance& inst, int modulus_bound = -1,
                           bool first_only = false);
MatchReport match_families(const Eq2Instance& inst, int modulus_bound = -1,
                           bool first_only = false);

/// The proven two-sided row condition for ((ab)^p a (bc)^q)^Z against a
/// two-fill instance. p >= 0, q > 0.
bool tab1r3_iff_check(int m, int x1, int y1, int p, int q);

}  // namespace unavoid
