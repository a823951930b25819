// Acceptance gate: ten checks, one line each, exit 0 only when all pass.
// Time tolerances are pinned here, next to the checks they guard.

#include <chrono>
#include <cstdio>
#include <exception>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "garside/budget.hpp"
#include "garside/calculus.hpp"
#include "garside/coxeter.hpp"
#include "garside/garside.hpp"
#include "garside/rewrite.hpp"
#include "garside/verify.hpp"

using namespace garside;

namespace {

const Budget kBudget;

constexpr double kLengthTableMsCap = 1000.0;       // criterion 1
constexpr double kLcmEqualityMsCap = 300000.0;     // criterion 2
constexpr double kLemmaMsCap = 60000.0;            // criterion 4, per lemma

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
};

std::vector<CatalogId> full_catalog() {
  std::vector<CatalogId> ids;
  for (int n = 1; n <= 8; ++n) ids.push_back({Family::A, n});
  for (int n = 2; n <= 8; ++n) ids.push_back({Family::B, n});
  for (int n = 3; n <= 8; ++n) ids.push_back({Family::D, n});
  for (int n = 6; n <= 8; ++n) ids.push_back({Family::E, n});
  ids.push_back({Family::F, 4});
  ids.push_back({Family::G, 2});
  ids.push_back({Family::H, 3});
  ids.push_back({Family::H, 4});
  for (int p : {5, 7, 8, 9, 10, 11, 12}) ids.push_back({Family::I2, p});
  return ids;
}

// Types whose lcm-vs-formula equality must fully succeed at default budgets.
std::vector<CatalogId> small_equality_set() {
  return {{Family::A, 1},  {Family::A, 2},  {Family::A, 3}, {Family::A, 4},
          {Family::A, 5},  {Family::B, 2},  {Family::B, 3}, {Family::B, 4},
          {Family::D, 4},  {Family::D, 5},  {Family::I2, 5},
          {Family::I2, 7}, {Family::I2, 8}, {Family::I2, 9},
          {Family::G, 2},  {Family::F, 4},  {Family::H, 3}};
}

// The larger types: minimum bar is length plus generator divisibility, with
// full equality attempted on top.
std::vector<CatalogId> large_equality_set() {
  return {{Family::E, 6}, {Family::E, 7}, {Family::E, 8}, {Family::H, 4},
          {Family::A, 6}, {Family::A, 7}, {Family::A, 8}, {Family::B, 5},
          {Family::B, 6}, {Family::B, 7}, {Family::B, 8}, {Family::D, 6},
          {Family::D, 7}, {Family::D, 8}};
}

Word random_word(std::mt19937& rng, int rank, std::size_t length) {
  std::uniform_int_distribution<int> gen(1, rank);
  Word w;
  for (std::size_t k = 0; k < length; ++k) w.push_back(gen(rng));
  return w;
}

Word perturbed(std::mt19937& rng, const Word& w, const CoxeterGraph& g) {
  Word current = w;
  for (int hop = 0; hop < 5; ++hop) {
    std::vector<Word> nbrs = rewrite_neighbors(current, g);
    if (nbrs.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, nbrs.size() - 1);
    current = nbrs[pick(rng)];
  }
  return current;
}

Outcome criterion_length_table(double elapsed_ms_out[1]) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  int checked = 0;
  for (const CatalogId& id : full_catalog()) {
    if (delta_formula(id).size() !=
        static_cast<std::size_t>(expected_reflection_count(id))) {
      out.fail(catalog_label(id) + " length off");
    }
    ++checked;
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  elapsed_ms_out[0] = ms;
  if (ms >= kLengthTableMsCap) {
    out.fail("took " + std::to_string(ms) + " ms, cap " +
             std::to_string(kLengthTableMsCap));
  }
  if (out.pass) {
    out.detail = std::to_string(checked) + " types";
  }
  return out;
}

Outcome criterion_lcm_equality() {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  for (const CatalogId& id : small_equality_set()) {
    CoxeterGraph g = catalog_graph(id);
    try {
      if (!words_equal(delta_by_lcm(g, kBudget), delta_formula(id), g,
                       kBudget)) {
        out.fail(catalog_label(id) + " lcm differs from the closed form");
      }
    } catch (const BudgetExceededError&) {
      out.fail(catalog_label(id) + " exhausted the default budget");
    }
  }
  int attempted_ok = 0;
  int attempted_skipped = 0;
  for (const CatalogId& id : large_equality_set()) {
    CoxeterGraph g = catalog_graph(id);
    Word formula = delta_formula(id);
    try {
      Word lcm = delta_by_lcm(g, kBudget);
      if (lcm.size() != formula.size()) {
        out.fail(catalog_label(id) + " lcm length differs");
        continue;
      }
      bool divides_all = true;
      for (int i = 1; i <= g.rank(); ++i) {
        divides_all = divides_all && left_divides(Word{i}, formula, g, kBudget);
      }
      if (!divides_all) {
        out.fail(catalog_label(id) + " misses a generator divisor");
        continue;
      }
      // minimum bar met; full equality attempted on top
      if (words_equal(lcm, formula, g, kBudget)) {
        ++attempted_ok;
      } else {
        out.fail(catalog_label(id) + " full equality answered false");
      }
    } catch (const BudgetExceededError&) {
      ++attempted_skipped;
    }
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  if (ms >= kLcmEqualityMsCap) {
    out.fail("took " + std::to_string(ms) + " ms, cap " +
             std::to_string(kLcmEqualityMsCap));
  }
  if (out.pass) {
    out.detail = "17 small types equal; full equality attempted on " +
                 std::to_string(attempted_ok + attempted_skipped) +
                 " large types, held on " + std::to_string(attempted_ok) +
                 ", budget-skipped on " + std::to_string(attempted_skipped);
  }
  return out;
}

Outcome criterion_chain_factorization() {
  Outcome out;
  std::set<std::string> seen;
  int steps = 0;
  for (const CatalogId& id : full_catalog()) {
    std::vector<ChainStep> chain = inclusion_chain(id);
    Word previous_delta;  // empty for the first step
    for (std::size_t k = 0; k < chain.size(); ++k) {
      Word built = relabel_word(previous_delta, chain[k].from_previous) +
                   relative_formula(chain[k].id, k);
      Word delta = delta_formula(chain[k].id);
      std::string key = catalog_label(chain[k].id);
      if (seen.insert(key).second) {
        ++steps;
        try {
          if (!words_equal(built, delta, chain[k].graph, kBudget)) {
            out.fail(key + " factorization broke");
          }
        } catch (const BudgetExceededError&) {
          out.fail(key + " factorization exhausted the budget");
        }
      }
      previous_delta = delta;
    }
  }
  if (out.pass) {
    out.detail = std::to_string(steps) + " distinct chain steps";
  }
  return out;
}

Outcome criterion_regression_lemmas() {
  Outcome out;
  struct Lemma {
    CatalogId id;
    int letter;
  };
  for (const Lemma& lemma :
       {Lemma{{Family::F, 4}, 1}, Lemma{{Family::E, 8}, 7}}) {
    CoxeterGraph g = catalog_graph(lemma.id);
    std::vector<ChainStep> chain = inclusion_chain(lemma.id);
    Word r = relative_formula(lemma.id, chain.size() - 1);
    Word lhs = Word{lemma.letter} + r;
    Word rhs = r + Word{lemma.letter};
    std::string name = catalog_label(lemma.id) + " x" +
                       std::to_string(lemma.letter);
    auto t0 = std::chrono::steady_clock::now();
    bool equal = false;
    try {
      equal = words_equal(lhs, rhs, g, kBudget, Engine::Reversing);
    } catch (const BudgetExceededError&) {
      try {
        equal = words_equal(lhs, rhs, g, kBudget.scaled(10),
                            Engine::Reversing);
        out.detail += name + " needed the 10x budget; ";
      } catch (const BudgetExceededError&) {
        out.fail(name + " exhausted even the 10x budget");
        continue;
      }
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    if (!equal) out.fail(name + " answered false");
    if (ms >= kLemmaMsCap) {
      out.fail(name + " took " + std::to_string(ms) + " ms, cap " +
               std::to_string(kLemmaMsCap));
    }
  }
  if (out.pass && out.detail.empty()) {
    out.detail = "both lemmas hold under reversing";
  }
  return out;
}

Outcome criterion_commutation_tables() {
  Outcome out;
  struct Table {
    CatalogId id;
    std::vector<std::pair<int, int>> pairs;
  };
  const std::vector<Table> tables = {
      {{Family::F, 4}, {{1, 1}, {2, 2}, {3, 3}}},
      {{Family::H, 3}, {{1, 2}, {2, 1}}},
      {{Family::H, 4}, {{1, 1}, {2, 2}, {3, 3}}},
      {{Family::E, 6}, {{1, 6}, {2, 5}, {3, 3}, {4, 2}, {5, 4}}},
      {{Family::E, 7}, {{1, 6}, {2, 5}, {3, 3}, {4, 4}, {5, 2}, {6, 1}}},
      {{Family::E, 8},
       {{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}, {7, 7}}},
  };
  int relations = 0;
  for (const Table& table : tables) {
    CoxeterGraph g = catalog_graph(table.id);
    std::vector<ChainStep> chain = inclusion_chain(table.id);
    Word r = relative_formula(table.id, chain.size() - 1);
    for (auto [i, j] : table.pairs) {
      ++relations;
      bool ok = false;
      try {
        ok = words_equal(Word{i} + r, r + Word{j}, g, kBudget,
                         Engine::Reversing);
      } catch (const BudgetExceededError&) {
      }
      if (!ok) {
        out.fail(catalog_label(table.id) + ": x" + std::to_string(i) +
                 " R = R x" + std::to_string(j) + " broke");
      }
    }
  }
  if (out.pass) {
    out.detail = std::to_string(relations) + " relations";
  }
  return out;
}

Outcome criterion_relative_properties() {
  Outcome out;
  // every listed relative is at most 20 letters, so all four properties must
  // decide, square-freeness included
  std::vector<CatalogId> ids = {
      {Family::A, 1},  {Family::A, 2},  {Family::A, 3}, {Family::A, 4},
      {Family::A, 5},  {Family::B, 3},  {Family::B, 4}, {Family::D, 4},
      {Family::I2, 5}, {Family::I2, 7}, {Family::I2, 8},
      {Family::I2, 9}, {Family::F, 4},  {Family::H, 3}};
  for (const CatalogId& id : ids) {
    std::vector<ChainStep> chain = inclusion_chain(id);
    std::size_t last = chain.size() - 1;
    Word r = relative_formula(id, last);
    RelativeRecord rec =
        build_relative_record(chain[last].from_previous, r, kBudget);
    RelativeChecks checks = check_relative_properties(rec, kBudget);
    if (!checks.all_pass()) {
      std::string prev =
          last == 0 ? "empty" : catalog_label(chain[last - 1].id);
      out.fail(catalog_label(id) + " over " + prev + " not fully verified");
    }
  }
  if (out.pass) {
    out.detail = std::to_string(ids.size()) +
                 " relatives, all four properties each";
  }
  return out;
}

Outcome criterion_engine_cross_validation() {
  Outcome out;
  std::mt19937 rng(424242);
  int disagreements = 0;
  int completed = 0;
  for (const CatalogId& id :
       {CatalogId{Family::A, 3}, CatalogId{Family::B, 3},
        CatalogId{Family::D, 4}, CatalogId{Family::I2, 5}}) {
    CoxeterGraph g = catalog_graph(id);
    std::uniform_int_distribution<std::size_t> len(0, 10);
    for (int trial = 0; trial < 1000; ++trial) {
      Word u = random_word(rng, g.rank(), len(rng));
      Word w = (trial % 2 == 0) ? perturbed(rng, u, g)
                                : random_word(rng, g.rank(), len(rng));
      try {
        bool by_reversing = words_equal(u, w, g, kBudget, Engine::Reversing);
        bool by_bfs = words_equal(u, w, g, kBudget, Engine::Bfs);
        ++completed;
        if (by_reversing != by_bfs) {
          ++disagreements;
          out.fail(catalog_label(id) + ": '" + u.str() + "' vs '" + w.str() +
                   "'");
        }
      } catch (const BudgetExceededError&) {
        // an exhausted case is not a completed case; it does not count
      }
    }
  }
  if (out.pass) {
    out.detail = std::to_string(completed) + " completed pairs, " +
                 std::to_string(disagreements) + " disagreements";
  }
  return out;
}

Outcome criterion_sigma_involution() {
  Outcome out;
  std::vector<CatalogId> ids = {
      {Family::A, 1},  {Family::A, 2},  {Family::A, 3}, {Family::A, 4},
      {Family::A, 5},  {Family::B, 2},  {Family::B, 3}, {Family::B, 4},
      {Family::D, 4},  {Family::D, 5},  {Family::F, 4}, {Family::G, 2},
      {Family::H, 3},  {Family::I2, 5}, {Family::I2, 7},
      {Family::I2, 8}, {Family::I2, 9}};
  for (const CatalogId& id : ids) {
    GarsideRecord rec = build_garside_record(id, kBudget);
    if (rec.sigma_exhausted || !rec.sigma_total || !rec.sigma_involution) {
      out.fail(catalog_label(id) + " sigma did not come out total");
      continue;
    }
    if (id.family == Family::A) {
      for (int i = 1; i <= id.param; ++i) {
        if (rec.sigma.image(i) != id.param + 1 - i) {
          out.fail(catalog_label(id) + " sigma is not the flip at x" +
                   std::to_string(i));
        }
      }
    }
  }
  if (out.pass) {
    out.detail = std::to_string(ids.size()) +
                 " types, A-family flips verified letterwise";
  }
  return out;
}

Outcome criterion_head_property() {
  Outcome out;
  std::mt19937 rng(910910);
  int heads = 0;
  for (const CatalogId& id :
       {CatalogId{Family::A, 3}, CatalogId{Family::B, 3}}) {
    CoxeterGraph g = catalog_graph(id);
    std::uniform_int_distribution<std::size_t> len(1, 12);
    for (int trial = 0; trial < 500; ++trial) {
      Word w = random_word(rng, g.rank(), len(rng));
      for (int i = 1; i <= g.rank() && out.pass; ++i) {
        for (int j = i + 1; j <= g.rank() && out.pass; ++j) {
          bool both = left_divides(Word{i}, w, g, kBudget) &&
                      left_divides(Word{j}, w, g, kBudget);
          auto z = garside_head(w, i, j, g, kBudget);
          if (z.has_value() != both) {
            out.fail(catalog_label(id) + ": head existence wrong on '" +
                     w.str() + "'");
            continue;
          }
          if (z.has_value()) {
            ++heads;
            Word head = alternating_word(i, j, g.order(i, j));
            if (!words_equal(head + *z, w, g, kBudget)) {
              out.fail(catalog_label(id) + ": head cofactor wrong on '" +
                       w.str() + "'");
            }
          }
        }
      }
    }
  }
  if (out.pass) {
    out.detail = std::to_string(heads) + " heads recombined";
  }
  return out;
}

Outcome criterion_rigidity() {
  Outcome out;
  CoxeterGraph a3 = catalog_graph({Family::A, 3});
  if (!is_rigid(Word{3, 2, 1}, a3, kBudget)) {
    out.fail("x3 x2 x1 should be rigid");
  }
  if (is_rigid(Word{2, 1, 3, 2}, a3, kBudget)) {
    out.fail("x2 x1 x3 x2 should not be rigid");
  }
  WordSet cls = equivalence_class(Word{2, 1, 3, 2}, a3, kBudget);
  WordSet expected{Word{2, 1, 3, 2}, Word{2, 3, 1, 2}};
  if (cls != expected) {
    out.fail("class of x2 x1 x3 x2 is not the expected two-element set");
  }
  if (out.pass) {
    out.detail = "rigid, non-rigid and exact class fixtures";
  }
  return out;
}

}  // namespace

int main() {
  struct Row {
    int number;
    const char* name;
    Outcome outcome;
    double ms;
  };
  std::vector<Row> rows;
  auto run = [&rows](int number, const char* name, auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("unexpected error: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    rows.push_back({number, name, std::move(out), ms});
  };

  run(1, "length-table", [] {
    double ms[1] = {0.0};
    return criterion_length_table(ms);
  });
  run(2, "lcm-equality", criterion_lcm_equality);
  run(3, "chain-factorization", criterion_chain_factorization);
  run(4, "regression-lemmas", criterion_regression_lemmas);
  run(5, "commutation-tables", criterion_commutation_tables);
  run(6, "relative-properties", criterion_relative_properties);
  run(7, "engine-cross-validation", criterion_engine_cross_validation);
  run(8, "sigma-involution", criterion_sigma_involution);
  run(9, "head-property", criterion_head_property);
  run(10, "rigidity-fixtures", criterion_rigidity);

  int passed = 0;
  for (const Row& row : rows) {
    if (row.outcome.pass) ++passed;
    std::printf("[%s] %2d %-24s %s (%.1f ms)\n",
                row.outcome.pass ? "pass" : "fail", row.number, row.name,
                row.outcome.detail.c_str(), row.ms);
  }
  std::printf("acceptance: %d/10 passed\n", passed);
  return passed == 10 ? 0 : 1;
}
