#include "garside/reversing.hpp"

#include <list>
#include <vector>

namespace garside {

namespace {

// C(s, t) = t s t ... of length m(s, t) - 1, for s != t.
Word complement(int s, int t, const CoxeterGraph& g) {
  return alternating_word(t, s, g.order(s, t) - 1);
}

}  // namespace

Fraction reverse_fraction(const Fraction& f, const CoxeterGraph& g,
                          const Budget& b, ReversalStats* stats) {
  if (!g.valid_word(f.denominator) || !g.valid_word(f.numerator)) {
    throw std::domain_error("fraction uses letters outside the graph");
  }

  // Signed letters: v > 0 is the generator x_v, v < 0 its formal inverse.
  std::list<int> work;
  for (std::size_t k = f.denominator.size(); k-- > 0;) {
    work.push_back(-f.denominator.letter(k));
  }
  for (std::size_t k = 0; k < f.numerator.size(); ++k) {
    work.push_back(f.numerator.letter(k));
  }

  std::uint64_t steps = 0;
  std::vector<int> patch;

  // Leftmost-first scan. Invariant: no negative-positive adjacency exists
  // strictly left of the cursor. A rewrite at the cursor can create a new
  // adjacency only one position to the left, so stepping back once after
  // each rewrite keeps the invariant and the scan linear in steps.
  auto cursor = work.begin();
  while (cursor != work.end()) {
    auto next = std::next(cursor);
    if (next == work.end()) break;
    if (*cursor < 0 && *next > 0) {
      if (++steps > b.max_reversal_steps) {
        if (stats != nullptr) stats->steps = steps;
        throw BudgetExceededError(
            BudgetExceededError::Kind::ReversalSteps,
            "reversal exceeds " + std::to_string(b.max_reversal_steps) +
                " steps");
      }
      const int s = -*cursor;
      const int t = *next;
      auto after = work.erase(cursor, std::next(next));
      if (s != t) {
        const Word pos = complement(s, t, g);
        const Word neg = complement(t, s, g);
        patch.clear();
        for (std::size_t k = 0; k < pos.size(); ++k) {
          patch.push_back(pos.letter(k));
        }
        for (std::size_t k = neg.size(); k-- > 0;) {
          patch.push_back(-neg.letter(k));
        }
        auto first = work.insert(after, patch.begin(), patch.end());
        cursor = (first == work.begin()) ? first : std::prev(first);
      } else {
        cursor = (after == work.begin()) ? after : std::prev(after);
      }
    } else {
      ++cursor;
    }
  }
  if (stats != nullptr) stats->steps = steps;

  // Terminal states are positive letters followed by negative letters; the
  // negatives, read right to left, spell the output denominator.
  Fraction out;
  bool in_tail = false;
  for (int v : work) {
    if (v > 0) {
      if (in_tail) {
        throw std::logic_error("reversal ended in a non-terminal state");
      }
      out.numerator.push_back(v);
    } else {
      in_tail = true;
      out.denominator.push_back(-v);
    }
  }
  out.denominator = out.denominator.reversed();
  return out;
}

}  // namespace garside
