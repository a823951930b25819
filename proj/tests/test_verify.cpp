#include <algorithm>
#include <string>

#include "doctest.h"
#include "garside/budget.hpp"
#include "garside/verify.hpp"

using namespace garside;

namespace {

const CheckResult* find_entry(const VerificationReport& report,
                              const std::string& name) {
  for (const CheckResult& e : report.entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("the verification suite passes at the default budget") {
  VerificationReport report = run_verification_suite(Budget{});
  CHECK(report.entries.size() == 58);
  CHECK(report.failed() == 0);
  CHECK(report.passed() == 55);
  // square-freeness of the three relatives above the letter cap
  CHECK(report.skipped() == 3);
  CHECK(report.exit_code() == 2);

  for (const char* name :
       {"length-table", "delta-A-chain", "delta-B-chain", "delta-D-chain",
        "delta-dihedral", "delta-F4", "delta-H-chain", "delta-E-chain",
        "delta-disjoint-union", "factor-F4-over-B3", "factor-E8-over-E7",
        "relative-checks-A1-over-empty", "relative-checks-F4-over-B3",
        "commute-F4-relative", "commute-H3-relative", "commute-E6-relative",
        "commute-E8-relative", "regression-F4-x1-R4",
        "regression-E8-x7-V8"}) {
    CAPTURE(name);
    const CheckResult* e = find_entry(report, name);
    REQUIRE(e != nullptr);
    CHECK(e->status == CheckStatus::Pass);
    CHECK(!e->claim.empty());
  }

  for (const char* name :
       {"relative-checks-H4-over-H3", "relative-checks-E7-over-E6",
        "relative-checks-E8-over-E7"}) {
    CAPTURE(name);
    const CheckResult* e = find_entry(report, name);
    REQUIRE(e != nullptr);
    CHECK(e->status == CheckStatus::Skipped);
    CHECK(e->detail.find("square-free=skipped") != std::string::npos);
    CHECK(e->detail.find("head=pass") != std::string::npos);
    CHECK(e->detail.find("action=pass") != std::string::npos);
    CHECK(e->detail.find("tail=pass") != std::string::npos);
  }
}

TEST_CASE("entry names are unique and stable") {
  VerificationReport report = run_verification_suite(Budget{});
  std::vector<std::string> names;
  for (const CheckResult& e : report.entries) names.push_back(e.name);
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());

  // deterministic: a second run produces the same names in the same order
  VerificationReport again = run_verification_suite(Budget{});
  std::vector<std::string> names2;
  for (const CheckResult& e : again.entries) names2.push_back(e.name);
  CHECK(names == names2);
}

TEST_CASE("a starved budget skips, never fails") {
  Budget tiny;
  tiny.max_class_size = 10;
  VerificationReport report = run_verification_suite(tiny);
  CHECK(report.failed() == 0);
  CHECK(report.skipped() > 3);
  CHECK(report.exit_code() == 2);
}

TEST_CASE("report formatting") {
  VerificationReport report;
  report.entries.push_back(
      {"toy-check", "x equals y", CheckStatus::Pass, "detail here"});
  report.entries.push_back({"other", "z", CheckStatus::Fail, ""});

  std::string text = format_text(report);
  CHECK(text.find("[pass] toy-check: x equals y (detail here)") !=
        std::string::npos);
  CHECK(text.find("[fail] other: z") != std::string::npos);
  CHECK(text.find("passed 1, failed 1, skipped 0") != std::string::npos);

  std::string machine = format_machine(report);
  CHECK(machine.find("check=toy-check status=pass claim=\"x equals y\"") !=
        std::string::npos);
  CHECK(machine.find("summary passed=1 failed=1 skipped=0") !=
        std::string::npos);

  CHECK(report.exit_code() == 1);
  CHECK(VerificationReport{}.exit_code() == 0);
}

TEST_CASE("exit codes rank fail over skip") {
  VerificationReport mixed;
  mixed.entries.push_back({"a", "", CheckStatus::Pass, ""});
  mixed.entries.push_back({"b", "", CheckStatus::Skipped, ""});
  CHECK(mixed.exit_code() == 2);
  mixed.entries.push_back({"c", "", CheckStatus::Fail, ""});
  CHECK(mixed.exit_code() == 1);

  VerificationReport all_pass;
  all_pass.entries.push_back({"a", "", CheckStatus::Pass, ""});
  CHECK(all_pass.exit_code() == 0);
}
