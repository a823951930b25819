#include "garside/permutation.hpp"

#include <stdexcept>

namespace garside {

void PartialPermutation::set(int from, int to) {
  auto fwd = forward_.find(from);
  if (fwd != forward_.end() && fwd->second != to) {
    throw std::domain_error("x" + std::to_string(from) +
                            " already has an image");
  }
  auto bwd = backward_.find(to);
  if (bwd != backward_.end() && bwd->second != from) {
    throw std::domain_error("x" + std::to_string(to) +
                            " already has a preimage");
  }
  forward_[from] = to;
  backward_[to] = from;
}

std::optional<int> PartialPermutation::image(int from) const {
  auto it = forward_.find(from);
  if (it == forward_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> PartialPermutation::domain() const {
  std::vector<int> out;
  out.reserve(forward_.size());
  for (const auto& [from, to] : forward_) out.push_back(from);
  return out;
}

std::vector<int> PartialPermutation::codomain() const {
  std::vector<int> out;
  out.reserve(backward_.size());
  for (const auto& [to, from] : backward_) out.push_back(to);
  return out;
}

bool PartialPermutation::total_on(int rank) const {
  if (forward_.size() != static_cast<std::size_t>(rank)) return false;
  for (int i = 1; i <= rank; ++i) {
    if (!forward_.contains(i)) return false;
  }
  return true;
}

bool PartialPermutation::involution() const {
  for (const auto& [from, to] : forward_) {
    auto back = forward_.find(to);
    if (back == forward_.end() || back->second != from) return false;
  }
  return true;
}

std::string PartialPermutation::str() const {
  std::string out;
  for (const auto& [from, to] : forward_) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(from) + "->x" + std::to_string(to);
  }
  return out;
}

}  // namespace garside
