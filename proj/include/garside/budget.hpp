#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace garside {

// Caps for the two decision engines. An instance that blows past a cap raises
// BudgetExceededError; "ran out of budget" is never conflated with a false
// answer.
struct Budget {
  std::size_t max_class_size = 1'000'000;
  std::uint64_t max_reversal_steps = 10'000'000;

  Budget scaled(unsigned factor) const {
    return Budget{max_class_size * factor, max_reversal_steps * factor};
  }
};

class BudgetExceededError : public std::runtime_error {
 public:
  enum class Kind { ClassSize, ReversalSteps };

  BudgetExceededError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace garside
