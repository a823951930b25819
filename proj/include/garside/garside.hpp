#pragma once

#include <cstddef>
#include <vector>

#include "garside/budget.hpp"
#include "garside/calculus.hpp"
#include "garside/coxeter.hpp"
#include "garside/permutation.hpp"
#include "garside/word.hpp"

namespace garside {

enum class CheckStatus { Pass, Fail, Skipped };

// Least common left-multiple of x1..xn, folded with common_left_multiple in
// generator order. For a spherical graph this is the Garside element.
Word delta_by_lcm(const CoxeterGraph& g, const Budget& b);

// Closed-form Garside word of a catalog graph, letter for letter: the
// concatenation of the chain's relative elements, relabeled along the chain
// (F4 is spelled directly; its chain relabels B3 onto {x3, x2, x1}).
Word delta_formula(const CatalogId& id);

// Closed-form relative element of one step of inclusion_chain(id), in the
// labels of that step's graph: the cofactor R with
// delta(previous) * R == delta(step).
Word relative_formula(const CatalogId& id, std::size_t step);

// Relative element computed from first principles as right_quotient of the
// two lcm-built Garside elements through the embedding.
Word relative_by_quotient(const GraphEmbedding& smaller_into_larger,
                          const Budget& b);

// Conjugation action of w: pairs (i, j) with x_i * w == w * x_j. At most one
// j can exist per i (the monoid is cancellative); two matches signal an
// engine bug and raise logic_error.
PartialPermutation sigma_permutation(const Word& w, const CoxeterGraph& g,
                                     const Budget& b);

// Same action restricted to the given source letters.
PartialPermutation sigma_on(const Word& w, const CoxeterGraph& g,
                            const std::vector<int>& letters, const Budget& b);

struct GarsideRecord {
  CatalogId id;
  CoxeterGraph graph;
  Word delta;
  std::size_t length = 0;
  PartialPermutation sigma;
  bool sigma_exhausted = false;  // extraction hit the budget
  bool sigma_total = false;
  bool sigma_involution = false;
};

// Delta by formula plus its extracted conjugation action. A total sigma that
// is not an involution is impossible for a Garside element, so that case
// raises logic_error; running out of budget during extraction is recorded,
// not fatal.
GarsideRecord build_garside_record(const CatalogId& id, const Budget& b);

// A one-vertex extension step together with its relative element and the
// data that characterizes it: the extension vertex is the unique left
// divisor, the conjugation action on the embedded generators is total, and
// its codomain misses exactly the unique right divisor.
struct RelativeRecord {
  CoxeterGraph larger;
  GraphEmbedding embedding;  // previous graph into larger
  Word relative;
  PartialPermutation sigma_rel;  // action on the embedded generators
  bool sigma_exhausted = false;
  int new_vertex = 0;   // the vertex outside the embedding image
  int tail_vertex = 0;  // unique right-dividing generator; 0 if not unique
};

RelativeRecord build_relative_record(const GraphEmbedding& smaller_into_larger,
                                     const Word& relative, const Budget& b);

// The four characterizing properties of a relative element, each decided
// separately so a budget skip on one never masks a failure of another:
// square_free (class enumeration; skipped above kSquareFreeLetterCap
// letters), unique_head (exactly the extension vertex left-divides),
// conjugation_bijection (sigma_rel total and injective on the old
// generators), unique_tail (exactly one right divisor, matching the codomain
// gap).
struct RelativeChecks {
  CheckStatus square_free = CheckStatus::Skipped;
  CheckStatus unique_head = CheckStatus::Skipped;
  CheckStatus conjugation_bijection = CheckStatus::Skipped;
  CheckStatus unique_tail = CheckStatus::Skipped;

  bool no_failures() const;
  bool all_pass() const;
};

RelativeChecks check_relative_properties(const RelativeRecord& rec,
                                         const Budget& b);

// Certification of a candidate against a known relative record by divisor
// structure: no square on the tail generator, the extension vertex is the
// unique left divisor, and the conjugation action is total on the old
// generators. A candidate passing all three is then checked equal to the
// reference word; an equality failure means the reference data is
// inconsistent and yields false.
bool certify_relative_by_divisors(const Word& candidate,
                                  const RelativeRecord& reference,
                                  const Budget& b);

// Cheaper certification for large types: the extension vertex left-divides,
// the conjugation action is total on the old generators, and the length
// equals the difference of the two reflection counts of the chain step.
bool certify_relative_by_length(const Word& candidate, const CatalogId& id,
                                std::size_t step, const Budget& b);

// Garside word of a disjoint union: concatenation of the parts' Garside
// words, shifted to the union's labels, verified against the lcm over the
// union before returning.
Word delta_of_union(const std::vector<CoxeterGraph>& parts, const Budget& b);

// Square-freeness above this letter count is reported as skipped instead of
// enumerated; classes of longer Garside-scale words are out of BFS reach.
inline constexpr std::size_t kSquareFreeLetterCap = 20;

}  // namespace garside
