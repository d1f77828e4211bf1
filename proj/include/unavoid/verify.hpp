// verify.hpp -- exhaustive small-scale verification suites: each checks one
// proposition, table, or operation against the exact decider.
#pragma once

#include <string>
#include <vector>

namespace unavoid::verify {

struct SuiteResult {
  std::string suite;
  bool pass = true;
  long long cases = 0;
  std::string failure;  // first counterexample, when pass is false
};

/// Run one suite by id; m_max <= 0 selects the suite's default bound.
SuiteResult run_suite(const std::string& id, int m_max = 0);

std::vector<std::string> suite_ids();

}  // namespace unavoid::verify
