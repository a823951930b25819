#pragma once

#include <cstdint>

#include "garside/budget.hpp"
#include "garside/coxeter.hpp"
#include "garside/word.hpp"

namespace garside {

// Formal right fraction denominator^-1 * numerator over one graph. The
// reversing engine rewrites fractions; positive words embed as denominator
// epsilon.
struct Fraction {
  Word denominator;
  Word numerator;
  bool operator==(const Fraction&) const = default;
};

struct ReversalStats {
  std::uint64_t steps = 0;
};

// Subword reversing for the complemented presentation of the monoid: the
// complement of s under t is C(s, t) = t s t ... with m(s, t) - 1 letters, so
// that s * C(s, t) and t * C(t, s) are the two sides of the defining
// relation. Each step rewrites the leftmost factor s^-1 t into
// C(s, t) * C(t, s)^-1 (plain cancellation when s = t) until no negative
// letter precedes a positive one.
//
// For the result (den', num'): den * num' == num * den' in the monoid, num'
// is a complement of den under num, and den' vanishes exactly when den
// left-divides num. Reversing a pair of positive words always terminates for
// these presentations; the step budget guards against blowup, not against
// divergence.
Fraction reverse_fraction(const Fraction& f, const CoxeterGraph& g,
                          const Budget& b, ReversalStats* stats = nullptr);

}  // namespace garside
