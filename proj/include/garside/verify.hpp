#pragma once

#include <string>
#include <vector>

#include "garside/budget.hpp"
#include "garside/garside.hpp"

namespace garside {

struct CheckResult {
  std::string name;   // stable key, e.g. "commute-V6"
  std::string claim;  // the identity being checked
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> entries;

  int passed() const;
  int failed() const;
  int skipped() const;

  // 0: all pass; 1: any failure; 2: no failures but budget skips remain.
  int exit_code() const;
};

// Runs the whole battery of closed-form identities: the length table, lcm
// versus closed form for every family, the chain factorizations, the
// characterizing properties of the relative elements, the commutation tables
// of the exceptional relatives, the two large reversing regressions, and the
// disjoint-union factorization. Deterministic: same budget, same report.
VerificationReport run_verification_suite(const Budget& b);

std::string format_text(const VerificationReport& report);
std::string format_machine(const VerificationReport& report);

}  // namespace garside
