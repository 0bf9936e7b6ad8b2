#pragma once

// Seeded verification suites. Each suite draws random (or exhaustive)
// instances, evaluates one quantitative claim per line exactly, and folds
// the lines into per-claim summaries. Trials run in parallel; every trial
// owns a generator derived from (seed, suite, trial), and lines are merged in
// trial order, so a report depends on its options only.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schreier/family.hpp"
#include "schreier/rational_vector.hpp"

namespace schreier {

enum class Relation { le, lt, eq, ge, gt };

std::string_view relation_symbol(Relation r);

struct CheckLine {
  std::string claim;
  std::uint64_t trial = 0;
  Relation relation = Relation::le;
  Rational observed, bound;
  bool pass = false;
};

struct ClaimSummary {
  std::string claim;
  Relation relation = Relation::le;
  std::uint64_t instances = 0, violations = 0;
  // Largest observed / bound over "<=" lines with a positive bound.
  std::optional<Rational> worst_ratio;
};

struct SuiteOptions {
  std::optional<unsigned> xi;           // restrict to one level when the suite allows it
  std::optional<std::uint64_t> trials;  // suite default otherwise
  std::uint64_t seed = 1;
  SearchBudget budget;
  bool keep_all_lines = false;  // otherwise only failing lines are kept
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::vector<ClaimSummary> claims;  // in first-seen order
  std::vector<CheckLine> lines;
  std::vector<std::string> notes;  // parts of a claim that the built range cannot reach

  std::uint64_t checks() const;
  std::uint64_t violations() const;
  bool pass() const { return violations() == 0; }
};

/// Selectors in a fixed order.
const std::vector<std::string>& suite_selectors();

/// Throws std::invalid_argument for an unknown selector or a level the suite
/// does not cover; BudgetExceeded propagates from exhaustive searches.
SuiteReport run_suite(std::string_view selector, const SuiteOptions& options);

/// Levels of the condition-2 test: G splits into successive members (resp.
/// maximal members) of S_zeta whose minima form a member (resp. maximal
/// member) of S_{xi-zeta}. Exposed for tests.
bool splits_through_level(const FinSet& g, Ordinal xi, Ordinal zeta, bool maximal);

}  // namespace schreier
