#pragma once

#include <stdexcept>
#include <string>

namespace schreier {

/// An exhaustive search would exceed its configured node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite prefix does not determine the blocks an operation needs.
class InsufficientPrefix : public std::runtime_error {
 public:
  InsufficientPrefix(const std::string& what, std::size_t first_incomplete)
      : std::runtime_error(what), first_incomplete_(first_incomplete) {}
  /// 1-based index of the first block the prefix leaves incomplete.
  std::size_t first_incomplete() const noexcept { return first_incomplete_; }

 private:
  std::size_t first_incomplete_;
};

/// The premises of a checked statement do not hold for the given input.
class HypothesisNotSatisfied : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A proven bound was observed to fail. Seeing this means a bug or a
/// counterexample, never a tuning issue.
class BoundViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoWitness : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace schreier
