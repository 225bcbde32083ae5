#pragma once

#include <stdexcept>
#include <string>

namespace bcb {

// Malformed input or a violated domain invariant (dimension mismatch,
// non-normalized probabilities, boundary MLE, ...).
class SpecError : public std::invalid_argument {
 public:
  explicit SpecError(const std::string& what) : std::invalid_argument(what) {}
};

// An exact enumeration would exceed its configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bcb
