#include "garside/calculus.hpp"

#include "garside/rewrite.hpp"

namespace garside {

bool left_divides(const Word& u, const Word& w, const CoxeterGraph& g,
                  const Budget& b, Engine engine) {
  if (engine == Engine::Bfs) return bfs::left_divides(u, w, g, b);
  if (u.empty()) return true;
  if (u.size() > w.size()) return false;  // relations preserve length
  Fraction out = reverse_fraction({u, w}, g, b);
  return out.denominator.empty();
}

bool right_divides(const Word& u, const Word& w, const CoxeterGraph& g,
                   const Budget& b, Engine engine) {
  if (engine == Engine::Bfs) return bfs::right_divides(u, w, g, b);
  return left_divides(u.reversed(), w.reversed(), g, b, Engine::Reversing);
}

bool words_equal(const Word& u, const Word& w, const CoxeterGraph& g,
                 const Budget& b, Engine engine) {
  if (u.size() != w.size()) return false;
  if (u == w) {
    if (!g.valid_word(u)) {
      throw std::domain_error("word uses letters outside the graph");
    }
    return true;
  }
  if (engine == Engine::Bfs) return bfs::words_equal(u, w, g, b);
  return left_divides(u, w, g, b, Engine::Reversing);
}

Word right_quotient(const Word& prefix, const Word& w, const CoxeterGraph& g,
                    const Budget& b) {
  Fraction out = reverse_fraction({prefix, w}, g, b);
  if (!out.denominator.empty()) {
    throw NotADivisorError("'" + prefix.str() + "' does not left-divide '" +
                           w.str() + "'");
  }
  return out.numerator;
}

Word common_left_multiple(const Word& u, const Word& w, const CoxeterGraph& g,
                          const Budget& b) {
  Fraction out = reverse_fraction({u, w}, g, b);
  return u + out.numerator;
}

std::optional<Word> garside_head(const Word& w, int i, int j,
                                 const CoxeterGraph& g, const Budget& b) {
  if (!g.valid_vertex(i) || !g.valid_vertex(j) || i == j) {
    throw std::domain_error("garside_head needs two distinct generators");
  }
  if (!left_divides(Word{i}, w, g, b) || !left_divides(Word{j}, w, g, b)) {
    return std::nullopt;
  }
  const Word head = alternating_word(i, j, g.order(i, j));
  try {
    return right_quotient(head, w, g, b);
  } catch (const NotADivisorError&) {
    // Both letters divide, so their common multiple must; reaching this
    // would falsify the engine, not the input.
    throw std::logic_error("head fails to divide although both letters do");
  }
}

}  // namespace garside
