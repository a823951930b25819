#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "garside/calculus.hpp"
#include "garside/coxeter.hpp"
#include "garside/garside.hpp"
#include "garside/reversing.hpp"
#include "garside/rewrite.hpp"
#include "garside/verify.hpp"

namespace {

using namespace garside;

// 0 true/pass, 1 false/fail, 2 budget exhausted, 3 usage or input error.
constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 3;

struct GraphArg {
  CoxeterGraph graph;
  std::optional<CatalogId> id;
};

// A graph argument is a catalog label ("B3", "I2(7)"), @file with the graph
// text format, or the format inline.
GraphArg load_graph(const std::string& arg) {
  if (auto id = parse_catalog_id(arg)) {
    return {catalog_graph(*id), id};
  }
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) {
      throw ParseError("cannot open graph file '" + arg.substr(1) + "'");
    }
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return {parse_graph(text), parse_catalog_id(text)};
  }
  if (arg.find("rank") != std::string::npos) {
    return {parse_graph(arg), std::nullopt};
  }
  throw ParseError("'" + arg +
                   "' is neither a catalog label, @file, nor inline graph "
                   "text");
}

Word parse_word_checked(const std::string& text, const CoxeterGraph& g) {
  Word w = Word::parse(text);
  if (!g.valid_word(w)) {
    throw std::domain_error("word '" + text +
                            "' uses letters outside the graph");
  }
  return w;
}

struct Output {
  bool machine = false;

  void pair(const std::string& key, const std::string& value) const {
    std::cout << key << (machine ? "=" : ": ") << value << "\n";
  }
  void word(const std::string& key, const Word& w) const {
    if (machine) {
      std::cout << key << "=" << w.str() << "\n";
    } else {
      std::cout << w.str() << "\n";
    }
  }
  void boolean(const std::string& key, bool value) const {
    if (machine) {
      std::cout << key << "=" << (value ? "true" : "false") << "\n";
    } else {
      std::cout << (value ? "true" : "false") << "\n";
    }
  }
};

int bool_exit(bool value) { return value ? kExitTrue : kExitFalse; }

// Decide with the requested engine(s); with "both", the answers must agree.
// Returns nullopt if every requested engine ran out of budget.
std::optional<bool> decide_both(
    bool both, Engine engine, const Output& out, const std::string& key,
    const std::function<bool(Engine)>& decide) {
  if (!both) return decide(engine);
  std::optional<bool> reversing, bfs;
  std::string note;
  try {
    reversing = decide(Engine::Reversing);
  } catch (const BudgetExceededError&) {
    note = "reversing budget-exhausted";
  }
  try {
    bfs = decide(Engine::Bfs);
  } catch (const BudgetExceededError&) {
    note += std::string(note.empty() ? "" : ", ") + "bfs budget-exhausted";
  }
  if (reversing.has_value() && bfs.has_value() && *reversing != *bfs) {
    throw std::logic_error("engine disagreement on " + key +
                           ": reversing says " +
                           (*reversing ? "true" : "false") +
                           ", bfs says " + (*bfs ? "true" : "false"));
  }
  if (!note.empty()) out.pair("note", note);
  if (reversing.has_value()) return reversing;
  if (bfs.has_value()) return bfs;
  return std::nullopt;
}

const char* status_text(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "?";
}

void write_json_report(const VerificationReport& report, const Budget& budget,
                       const std::string& path) {
  nlohmann::json doc;
  doc["entries"] = nlohmann::json::array();
  for (const auto& e : report.entries) {
    doc["entries"].push_back({{"name", e.name},
                              {"claim", e.claim},
                              {"status", status_text(e.status)},
                              {"detail", e.detail}});
  }
  doc["summary"] = {{"passed", report.passed()},
                    {"failed", report.failed()},
                    {"skipped", report.skipped()}};
  doc["budget"] = {{"max_class_size", budget.max_class_size},
                   {"max_reversal_steps", budget.max_reversal_steps}};
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write report file '" + path + "'");
  }
  out << doc.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// bench

struct BenchRow {
  std::string outcome;
  std::optional<std::uint64_t> steps;
  std::optional<std::size_t> states;
};

struct BenchInstance {
  std::string name;
  bool reversing_applicable = false;
  bool bfs_applicable = false;
  std::function<BenchRow(Engine, const Budget&)> run;
};

BenchInstance eq_instance(const std::string& name, const CoxeterGraph& g,
                          const Word& u, const Word& w) {
  return {name, true, true, [g, u, w](Engine engine, const Budget& b) {
            BenchRow row;
            if (engine == Engine::Reversing) {
              if (u.size() != w.size()) {
                row.outcome = "false";
                row.steps = 0;
                return row;
              }
              ReversalStats stats;
              Fraction out = reverse_fraction({u, w}, g, b, &stats);
              row.outcome = out.denominator.empty() ? "true" : "false";
              row.steps = stats.steps;
            } else {
              WordSet cls = equivalence_class(w, g, b);
              row.outcome = cls.contains(u) ? "true" : "false";
              row.states = cls.size();
            }
            return row;
          }};
}

BenchInstance class_instance(const std::string& name, const CoxeterGraph& g,
                             const Word& w) {
  return {name, false, true, [g, w](Engine, const Budget& b) {
            BenchRow row;
            row.states = equivalence_class(w, g, b).size();
            row.outcome = "ok";
            return row;
          }};
}

std::vector<BenchInstance> bench_instances() {
  std::vector<BenchInstance> all;
  auto delta_pair = [](const CatalogId& id) {
    Budget unlimited;
    CoxeterGraph g = catalog_graph(id);
    return std::tuple<CoxeterGraph, Word, Word>(
        g, delta_formula(id), delta_by_lcm(g, unlimited));
  };
  for (const CatalogId& id :
       {CatalogId{Family::A, 3}, CatalogId{Family::B, 3},
        CatalogId{Family::D, 4}, CatalogId{Family::I2, 7},
        CatalogId{Family::F, 4}, CatalogId{Family::H, 3},
        CatalogId{Family::E, 6}}) {
    auto [g, formula, lcm] = delta_pair(id);
    all.push_back(
        eq_instance("eq-" + catalog_label(id) + "-delta", g, formula, lcm));
  }
  {
    CoxeterGraph f4 = catalog_graph({Family::F, 4});
    Word r = relative_formula({Family::F, 4}, 3);
    all.push_back(eq_instance("eq-F4-lemma", f4, Word{1} + r, r + Word{1}));
  }
  {
    CoxeterGraph e8 = catalog_graph({Family::E, 8});
    Word r = relative_formula({Family::E, 8}, 7);
    all.push_back(eq_instance("eq-E8-lemma", e8, Word{7} + r, r + Word{7}));
  }
  for (const CatalogId& id : {CatalogId{Family::A, 3}, CatalogId{Family::B, 3},
                              CatalogId{Family::D, 4}}) {
    all.push_back(class_instance("class-" + catalog_label(id) + "-delta",
                                 catalog_graph(id), delta_formula(id)));
  }
  {
    CoxeterGraph h3 = catalog_graph({Family::H, 3});
    Word s3 = relative_formula({Family::H, 3}, 2);
    all.push_back({"sqfree-H3-relative", false, true,
                   [h3, s3](Engine, const Budget& b) {
                     BenchRow row;
                     WordSet cls = equivalence_class(s3, h3, b);
                     bool square = false;
                     for (const Word& m : cls) {
                       for (std::size_t p = 0; p + 1 < m.size(); ++p) {
                         if (m.letter(p) == m.letter(p + 1)) square = true;
                       }
                     }
                     row.outcome = square ? "false" : "true";
                     row.states = cls.size();
                     return row;
                   }});
  }
  {
    CoxeterGraph e8 = catalog_graph({Family::E, 8});
    auto chain = inclusion_chain({Family::E, 8});
    Word prev = delta_formula({Family::E, 7});
    Word relabeled = relabel_word(prev, chain.back().from_previous);
    Word target = delta_formula({Family::E, 8});
    all.push_back({"quotient-E8-relative", true, false,
                   [e8, relabeled, target](Engine, const Budget& b) {
                     BenchRow row;
                     ReversalStats stats;
                     Fraction out =
                         reverse_fraction({relabeled, target}, e8, b, &stats);
                     row.outcome =
                         out.denominator.empty() ? "ok" : "not-a-divisor";
                     row.steps = stats.steps;
                     return row;
                   }});
  }
  return all;
}

int run_bench(const std::string& engine_name, const Budget& budget,
              const std::vector<std::string>& filter) {
  std::vector<BenchInstance> all = bench_instances();
  std::cout << "instance,engine,outcome,wall_ms,steps,states\n";
  for (const BenchInstance& inst : all) {
    if (!filter.empty() &&
        std::find(filter.begin(), filter.end(), inst.name) == filter.end()) {
      continue;
    }
    std::vector<Engine> engines;
    if (inst.reversing_applicable &&
        (engine_name == "both" || engine_name == "reversing")) {
      engines.push_back(Engine::Reversing);
    }
    if (inst.bfs_applicable &&
        (engine_name == "both" || engine_name == "bfs")) {
      engines.push_back(Engine::Bfs);
    }
    for (Engine engine : engines) {
      BenchRow row;
      auto t0 = std::chrono::steady_clock::now();
      try {
        row = inst.run(engine, budget);
      } catch (const BudgetExceededError&) {
        row.outcome = "budget-exhausted";
      }
      auto wall = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
      std::cout << inst.name << ","
                << (engine == Engine::Reversing ? "reversing" : "bfs") << ","
                << row.outcome << "," << (static_cast<double>(wall) / 1000.0)
                << "," << (row.steps ? std::to_string(*row.steps) : "") << ","
                << (row.states ? std::to_string(*row.states) : "") << "\n";
    }
  }
  return kExitTrue;
}

std::vector<int> parse_map_option(const std::string& text) {
  std::vector<int> map;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      map.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw ParseError("bad --map entry '" + token + "'");
    }
  }
  return map;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Garside and relative Garside elements of spherical Artin monoids"};
  app.require_subcommand(1);

  Budget budget;
  std::string engine_name = "reversing";
  std::string format_name = "text";
  app.add_option("--budget-class", budget.max_class_size,
                 "cap on rewrite-class enumeration size");
  app.add_option("--budget-steps", budget.max_reversal_steps,
                 "cap on reversal step count");
  app.add_option("--engine", engine_name, "decision engine")
      ->check(CLI::IsMember({"reversing", "bfs", "both"}));
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"text", "machine"}));

  std::string g_delta, g_rel_large, g_rel_small, g_eq, g_div, g_sq, g_rigid,
      g_sigma, g_lexmin, g_quot, g_lcm;
  std::string w_eq_u, w_eq_w, w_div_u, w_div_w, w_sq, w_rigid, w_sigma,
      w_lexmin, w_quot_p, w_quot_w, w_lcm_u, w_lcm_w;
  bool check_length = false, rel_check = false, div_right = false;
  std::string rel_map, json_path;
  std::vector<std::string> bench_filter;

  auto* c_delta = app.add_subcommand("delta", "Garside element of a graph");
  c_delta->add_option("graph", g_delta)->required();
  c_delta->add_flag("--check-length", check_length,
                    "also compare against the reflection count");

  auto* c_rel = app.add_subcommand(
      "relative", "relative Garside element of a graph over a subgraph");
  c_rel->add_option("larger", g_rel_large)->required();
  c_rel->add_option("smaller", g_rel_small)->required();
  c_rel->add_option("--map", rel_map,
                    "comma-separated images of the smaller graph's vertices "
                    "(default: identity)");
  c_rel->add_flag("--check", rel_check,
                  "cross-check the closed form against the quotient route");

  auto* c_eq = app.add_subcommand("eq", "decide equality of two words");
  c_eq->add_option("graph", g_eq)->required();
  c_eq->add_option("u", w_eq_u)->required();
  c_eq->add_option("w", w_eq_w)->required();

  auto* c_div = app.add_subcommand("divides", "decide left divisibility");
  c_div->add_option("graph", g_div)->required();
  c_div->add_option("u", w_div_u)->required();
  c_div->add_option("w", w_div_w)->required();
  c_div->add_flag("--right", div_right, "decide right divisibility instead");

  auto* c_sq = app.add_subcommand("sqfree", "decide square-freeness");
  c_sq->add_option("graph", g_sq)->required();
  c_sq->add_option("w", w_sq)->required();

  auto* c_rigid = app.add_subcommand(
      "rigid", "decide whether the word admits no rewrite at all");
  c_rigid->add_option("graph", g_rigid)->required();
  c_rigid->add_option("w", w_rigid)->required();

  auto* c_sigma = app.add_subcommand(
      "sigma", "conjugation action of a word on the generators");
  c_sigma->add_option("graph", g_sigma)->required();
  c_sigma->add_option("--word", w_sigma,
                      "word to analyze (default: the Garside element)");

  auto* c_lexmin =
      app.add_subcommand("lexmin", "lexicographically least equal word");
  c_lexmin->add_option("graph", g_lexmin)->required();
  c_lexmin->add_option("w", w_lexmin)->required();

  auto* c_quot = app.add_subcommand(
      "quotient", "right cofactor of a word over a left-dividing prefix");
  c_quot->add_option("graph", g_quot)->required();
  c_quot->add_option("prefix", w_quot_p)->required();
  c_quot->add_option("w", w_quot_w)->required();

  auto* c_lcm =
      app.add_subcommand("lcm", "least common left-multiple of two words");
  c_lcm->add_option("graph", g_lcm)->required();
  c_lcm->add_option("u", w_lcm_u)->required();
  c_lcm->add_option("w", w_lcm_w)->required();

  auto* c_verify = app.add_subcommand(
      "verify-paper", "run the whole battery of closed-form identity checks");
  c_verify->add_option("--json", json_path, "also write a JSON report");

  auto* c_bench = app.add_subcommand(
      "bench", "time both engines on a fixed instance set (CSV)");
  c_bench->add_option("--instances", bench_filter,
                      "restrict to these instance names")
      ->delimiter(',');

  for (CLI::App* sub : app.get_subcommands(nullptr)) {
    sub->fallthrough();  // global flags may come after the subcommand
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const Output out{format_name == "machine"};
  const bool both = engine_name == "both";
  const Engine engine = engine_name == "bfs" ? Engine::Bfs : Engine::Reversing;

  try {
    if (app.got_subcommand(c_delta)) {
      GraphArg g = load_graph(g_delta);
      Word delta =
          g.id ? delta_formula(*g.id) : delta_by_lcm(g.graph, budget);
      out.word("word", delta);
      out.pair("length", std::to_string(delta.size()));
      if (check_length) {
        if (!g.id) {
          throw std::domain_error(
              "--check-length needs a catalog graph (the table covers the "
              "catalog only)");
        }
        bool ok = delta.size() ==
                  static_cast<std::size_t>(expected_reflection_count(*g.id));
        out.pair("length-table", ok ? "pass" : "fail");
        if (!ok) return kExitFalse;
      }
      return kExitTrue;
    }

    if (app.got_subcommand(c_rel)) {
      GraphArg larger = load_graph(g_rel_large);
      GraphArg smaller = load_graph(g_rel_small);
      std::optional<Word> formula;
      std::optional<GraphEmbedding> emb;
      if (larger.id && rel_map.empty()) {
        // recognize the canonical one-vertex extension and take its closed
        // form (and its embedding, which need not be the identity map)
        std::vector<ChainStep> chain = inclusion_chain(*larger.id);
        if (smaller.id && chain.size() >= 2 &&
            chain[chain.size() - 2].id == *smaller.id) {
          formula = relative_formula(*larger.id, chain.size() - 1);
          emb = chain.back().from_previous;
        } else if (smaller.graph.rank() == 0 && chain.size() == 1) {
          formula = relative_formula(*larger.id, 0);
          emb = chain.back().from_previous;
        }
      }
      if (!emb.has_value()) {
        std::vector<int> map;
        if (!rel_map.empty()) {
          map = parse_map_option(rel_map);
        } else {
          for (int i = 1; i <= smaller.graph.rank(); ++i) map.push_back(i);
        }
        emb = GraphEmbedding(smaller.graph, larger.graph, map);
      }
      if (formula.has_value()) {
        out.word("word", *formula);
        out.pair("length", std::to_string(formula->size()));
        if (rel_check) {
          Word quotient = relative_by_quotient(*emb, budget);
          bool ok = words_equal(*formula, quotient, larger.graph, budget);
          out.pair("check", ok ? "pass" : "fail");
          if (!ok) return kExitFalse;
        }
      } else {
        Word quotient = relative_by_quotient(*emb, budget);
        out.word("word", quotient);
        out.pair("length", std::to_string(quotient.size()));
        if (rel_check) {
          // no closed form here, so check the defining identity instead:
          // the embedded Garside element of the subgraph, times the
          // quotient, must equal the Garside element of the larger graph
          Word lhs =
              relabel_word(delta_by_lcm(emb->source(), budget), *emb) +
              quotient;
          bool ok =
              words_equal(lhs, delta_by_lcm(larger.graph, budget),
                          larger.graph, budget);
          out.pair("check", ok ? "pass" : "fail");
          if (!ok) return kExitFalse;
        }
      }
      return kExitTrue;
    }

    if (app.got_subcommand(c_eq)) {
      GraphArg g = load_graph(g_eq);
      Word u = parse_word_checked(w_eq_u, g.graph);
      Word w = parse_word_checked(w_eq_w, g.graph);
      auto result = decide_both(both, engine, out, "eq", [&](Engine e) {
        return words_equal(u, w, g.graph, budget, e);
      });
      if (!result.has_value()) {
        std::cerr << "budget exhausted on every requested engine\n";
        return kExitBudget;
      }
      out.boolean("equal", *result);
      return bool_exit(*result);
    }

    if (app.got_subcommand(c_div)) {
      GraphArg g = load_graph(g_div);
      Word u = parse_word_checked(w_div_u, g.graph);
      Word w = parse_word_checked(w_div_w, g.graph);
      auto result = decide_both(both, engine, out, "divides", [&](Engine e) {
        return div_right ? right_divides(u, w, g.graph, budget, e)
                         : left_divides(u, w, g.graph, budget, e);
      });
      if (!result.has_value()) {
        std::cerr << "budget exhausted on every requested engine\n";
        return kExitBudget;
      }
      out.boolean("divides", *result);
      return bool_exit(*result);
    }

    if (app.got_subcommand(c_sq)) {
      GraphArg g = load_graph(g_sq);
      Word w = parse_word_checked(w_sq, g.graph);
      bool result = is_square_free(w, g.graph, budget);
      out.boolean("square-free", result);
      return bool_exit(result);
    }

    if (app.got_subcommand(c_rigid)) {
      GraphArg g = load_graph(g_rigid);
      Word w = parse_word_checked(w_rigid, g.graph);
      bool result = is_rigid(w, g.graph, budget);
      out.boolean("rigid", result);
      return bool_exit(result);
    }

    if (app.got_subcommand(c_sigma)) {
      GraphArg g = load_graph(g_sigma);
      Word w;
      if (!w_sigma.empty()) {
        w = parse_word_checked(w_sigma, g.graph);
      } else {
        w = g.id ? delta_formula(*g.id) : delta_by_lcm(g.graph, budget);
      }
      PartialPermutation sigma = sigma_permutation(w, g.graph, budget);
      out.pair("sigma", sigma.str());
      out.pair("total", sigma.total_on(g.graph.rank()) ? "yes" : "no");
      out.pair("involution", sigma.involution() ? "yes" : "no");
      return kExitTrue;
    }

    if (app.got_subcommand(c_lexmin)) {
      GraphArg g = load_graph(g_lexmin);
      Word w = parse_word_checked(w_lexmin, g.graph);
      out.word("word", lexmin_representative(w, g.graph, budget));
      return kExitTrue;
    }

    if (app.got_subcommand(c_quot)) {
      GraphArg g = load_graph(g_quot);
      Word prefix = parse_word_checked(w_quot_p, g.graph);
      Word w = parse_word_checked(w_quot_w, g.graph);
      try {
        Word q = right_quotient(prefix, w, g.graph, budget);
        out.word("word", q);
        out.pair("length", std::to_string(q.size()));
        return kExitTrue;
      } catch (const NotADivisorError& e) {
        std::cerr << "not a divisor: " << e.what() << "\n";
        return kExitFalse;
      }
    }

    if (app.got_subcommand(c_lcm)) {
      GraphArg g = load_graph(g_lcm);
      Word u = parse_word_checked(w_lcm_u, g.graph);
      Word w = parse_word_checked(w_lcm_w, g.graph);
      Word m = common_left_multiple(u, w, g.graph, budget);
      out.word("word", m);
      out.pair("length", std::to_string(m.size()));
      return kExitTrue;
    }

    if (app.got_subcommand(c_verify)) {
      VerificationReport report = run_verification_suite(budget);
      std::cout << (out.machine ? format_machine(report)
                                : format_text(report));
      if (!json_path.empty()) {
        write_json_report(report, budget, json_path);
      }
      return report.exit_code();
    }

    if (app.got_subcommand(c_bench)) {
      // bench defaults to both engines so the CSV carries the comparison
      bool engine_given = app.count("--engine") > 0;
      return run_bench(engine_given ? engine_name : "both", budget,
                       bench_filter);
    }
  } catch (const BudgetExceededError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
