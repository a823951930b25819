#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace garside {

// Injective map between two subsets of generator indices, e.g. the
// conjugation action of a Garside or relative element on the generators.
class PartialPermutation {
 public:
  void set(int from, int to);
  bool defined(int from) const { return forward_.contains(from); }
  std::optional<int> image(int from) const;
  std::size_t size() const { return forward_.size(); }

  std::vector<int> domain() const;
  std::vector<int> codomain() const;  // sorted

  // Domain is exactly {1..rank}.
  bool total_on(int rank) const;

  // Every pair (i, j) is matched by (j, i).
  bool involution() const;

  std::string str() const;  // "x1->x3 x2->x2 x3->x1"

  const std::map<int, int>& pairs() const { return forward_; }
  bool operator==(const PartialPermutation& other) const {
    return forward_ == other.forward_;
  }

 private:
  std::map<int, int> forward_;
  std::map<int, int> backward_;
};

}  // namespace garside
