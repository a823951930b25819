#include "garside/rewrite.hpp"

#include <algorithm>

namespace garside {

namespace {

// Breadth-first closure with an early-exit visitor. visit() sees every class
// member exactly once (the seed first) and stops the walk by returning true.
// Returns whether the walk was stopped. The budget caps the visited set; a
// stop decision is always taken before the cap check, so an early answer is
// never lost to the budget.
template <typename Visitor>
bool walk_class(const Word& w, const CoxeterGraph& g, const Budget& b,
                Visitor&& visit) {
  if (!g.valid_word(w)) {
    throw std::domain_error("word uses letters outside the graph");
  }
  if (visit(w)) return true;
  WordSet visited{w};
  std::vector<Word> queue{w};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Word current = queue[head];
    for (Word& next : rewrite_neighbors(current, g)) {
      if (visited.contains(next)) continue;
      if (visit(next)) return true;
      if (visited.size() + 1 > b.max_class_size) {
        throw BudgetExceededError(
            BudgetExceededError::Kind::ClassSize,
            "equivalence class exceeds " + std::to_string(b.max_class_size) +
                " words");
      }
      visited.insert(next);
      queue.push_back(std::move(next));
    }
  }
  return false;
}

bool has_adjacent_pair(const Word& w, int gen) {
  for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
    if (w.letter(pos) == gen && w.letter(pos + 1) == gen) return true;
  }
  return false;
}

}  // namespace

std::vector<Word> rewrite_neighbors(const Word& w, const CoxeterGraph& g) {
  if (!g.valid_word(w)) {
    throw std::domain_error("word uses letters outside the graph");
  }
  std::vector<Word> out;
  const std::size_t len = w.size();
  for (std::size_t pos = 0; pos + 1 < len; ++pos) {
    const int s = w.letter(pos);
    const int t = w.letter(pos + 1);
    if (s == t) continue;
    const std::size_t m = static_cast<std::size_t>(g.order(s, t));
    if (pos + m > len) continue;
    bool block = true;
    for (std::size_t k = 2; k < m; ++k) {
      if (w.letter(pos + k) != (k % 2 == 0 ? s : t)) {
        block = false;
        break;
      }
    }
    if (!block) continue;
    Word next = w;
    for (std::size_t k = 0; k < m; ++k) {
      next.set_letter(pos + k, k % 2 == 0 ? t : s);
    }
    out.push_back(std::move(next));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

WordSet equivalence_class(const Word& w, const CoxeterGraph& g,
                          const Budget& b) {
  WordSet all;
  walk_class(w, g, b, [&all](const Word& member) {
    all.insert(member);
    return false;
  });
  return all;
}

bool is_square_free(const Word& w, const CoxeterGraph& g, const Budget& b) {
  bool found = walk_class(w, g, b, [](const Word& member) {
    for (std::size_t pos = 0; pos + 1 < member.size(); ++pos) {
      if (member.letter(pos) == member.letter(pos + 1)) return true;
    }
    return false;
  });
  return !found;
}

bool is_rigid(const Word& w, const CoxeterGraph& g, const Budget& b) {
  std::size_t count = 0;
  bool found = walk_class(w, g, b, [&count](const Word&) {
    return ++count > 1;
  });
  return !found;
}

Word lexmin_representative(const Word& w, const CoxeterGraph& g,
                           const Budget& b) {
  Word best = w;
  walk_class(w, g, b, [&best](const Word& member) {
    if (member < best) best = member;
    return false;
  });
  return best;
}

namespace bfs {

bool words_equal(const Word& u, const Word& w, const CoxeterGraph& g,
                 const Budget& b) {
  if (u.size() != w.size()) return false;
  return walk_class(w, g, b,
                    [&u](const Word& member) { return member == u; });
}

bool left_divides(const Word& u, const Word& w, const CoxeterGraph& g,
                  const Budget& b) {
  if (u.empty()) return true;
  if (u.size() > w.size()) return false;
  const WordSet prefixes = equivalence_class(u, g, b);
  const std::size_t k = u.size();
  return walk_class(w, g, b, [&prefixes, k](const Word& member) {
    return prefixes.contains(member.prefix(k));
  });
}

bool right_divides(const Word& u, const Word& w, const CoxeterGraph& g,
                   const Budget& b) {
  if (u.empty()) return true;
  if (u.size() > w.size()) return false;
  const WordSet suffixes = equivalence_class(u, g, b);
  const std::size_t k = u.size();
  return walk_class(w, g, b, [&suffixes, k](const Word& member) {
    return suffixes.contains(member.suffix(k));
  });
}

bool has_square_factor(const Word& w, int gen, const CoxeterGraph& g,
                       const Budget& b) {
  return walk_class(w, g, b, [gen](const Word& member) {
    return has_adjacent_pair(member, gen);
  });
}

}  // namespace bfs

}  // namespace garside
