#pragma once

#include <unordered_set>
#include <vector>

#include "garside/budget.hpp"
#include "garside/coxeter.hpp"
#include "garside/word.hpp"

namespace garside {

using WordSet = std::unordered_set<Word>;

// All words obtained from w by rewriting one alternating block s t s ... of
// length m(s, t) into t s t ... in place. Sorted, duplicate-free. This is one
// application of one defining relation; its reflexive-transitive closure is
// monoid equality.
std::vector<Word> rewrite_neighbors(const Word& w, const CoxeterGraph& g);

// Closure of {w} under rewrite_neighbors, breadth-first. Throws
// BudgetExceededError once the class would outgrow b.max_class_size.
WordSet equivalence_class(const Word& w, const CoxeterGraph& g,
                          const Budget& b);

// True iff no word in the class of w has two equal adjacent letters. Class
// enumeration is the implemented decision procedure; a found square returns
// false early, a "true" requires the full class.
bool is_square_free(const Word& w, const CoxeterGraph& g, const Budget& b);

// True iff the class of w is the singleton {w}.
bool is_rigid(const Word& w, const CoxeterGraph& g, const Budget& b);

// Length-lexicographic minimum of the class, with x1 < x2 < ... All class
// members share w's length, so this is the lexicographic minimum.
Word lexmin_representative(const Word& w, const CoxeterGraph& g,
                           const Budget& b);

// Ground-truth decisions by class enumeration. Slow but assumption-free; the
// reversing engine in calculus.hpp is the scalable route and must agree.
namespace bfs {

bool words_equal(const Word& u, const Word& w, const CoxeterGraph& g,
                 const Budget& b);
bool left_divides(const Word& u, const Word& w, const CoxeterGraph& g,
                  const Budget& b);
bool right_divides(const Word& u, const Word& w, const CoxeterGraph& g,
                   const Budget& b);

// True iff some member of the class of w contains the factor x_gen x_gen.
bool has_square_factor(const Word& w, int gen, const CoxeterGraph& g,
                       const Budget& b);

}  // namespace bfs

}  // namespace garside
