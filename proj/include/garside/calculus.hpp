#pragma once

#include <optional>
#include <stdexcept>

#include "garside/budget.hpp"
#include "garside/coxeter.hpp"
#include "garside/reversing.hpp"
#include "garside/word.hpp"

namespace garside {

// Which decision procedure to run. Reversing is the default everywhere; the
// BFS route exists as an independent oracle and the two must agree wherever
// both complete.
enum class Engine { Reversing, Bfs };

class NotADivisorError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// u left-divides w: some positive word v has u * v == w in the monoid. Via
// reversing this is "the output denominator of w over u is empty".
bool left_divides(const Word& u, const Word& w, const CoxeterGraph& g,
                  const Budget& b, Engine engine = Engine::Reversing);

// u right-divides w. The defining relations are invariant under reversal, so
// this is left divisibility of the reversed words; the BFS route decides it
// independently through suffixes.
bool right_divides(const Word& u, const Word& w, const CoxeterGraph& g,
                   const Budget& b, Engine engine = Engine::Reversing);

// Monoid equality. The relations preserve length, so this is "same length
// and u left-divides w".
bool words_equal(const Word& u, const Word& w, const CoxeterGraph& g,
                 const Budget& b, Engine engine = Engine::Reversing);

// The unique r with prefix * r == w. Throws NotADivisorError when prefix is
// not a left divisor of w.
Word right_quotient(const Word& prefix, const Word& w, const CoxeterGraph& g,
                    const Budget& b);

// Least common left-multiple: both words left-divide the result, and the
// result left-divides every word that both u and w left-divide. Computed as
// u times the complement of u under w.
Word common_left_multiple(const Word& u, const Word& w, const CoxeterGraph& g,
                          const Budget& b);

// If x_i and x_j (i != j) both left-divide w, so does their least common
// multiple, the alternating word on x_i, x_j of m(i, j) letters; the result
// is the cofactor Z with alt(i, j, m) * Z == w, spelled with x_i first.
// Absent iff one of the two letters fails to left-divide w.
std::optional<Word> garside_head(const Word& w, int i, int j,
                                 const CoxeterGraph& g, const Budget& b);

}  // namespace garside
