#pragma once

// Schreier families S_xi for finite xi.
//
// S_0 holds the empty set and all singletons. A nonempty F belongs to
// S_{z+1} when it splits into n <= min F successive members of S_z. Every
// family here is hereditary and spreading, which is what makes the greedy
// routines below exact.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "schreier/finset.hpp"

namespace schreier {

/// Finite ordinal index of a Schreier family.
struct Ordinal {
  unsigned value = 0;
  friend auto operator<=>(Ordinal, Ordinal) = default;
};

/// Successive maximal S_xi blocks of a prefix, plus the trailing elements
/// that the prefix cannot complete into a block.
struct Decomposition {
  Ordinal xi;
  std::vector<FinSet> blocks;
  FinSet remainder;
};

/// Limits for the exhaustive subset searches.
struct SearchBudget {
  std::uint64_t max_nodes = std::uint64_t{1} << 20;
};

// -- Low-level greedy primitives on a strictly increasing sequence. ---------

/// End (exclusive) of the maximal S_xi block that starts at seq[start], or
/// nullopt when the sequence runs out before the block is complete.
std::optional<std::size_t> maximal_block_end(std::span<const Element> seq, std::size_t start,
                                             Ordinal xi);

/// End (exclusive) of the longest run seq[start..end) that lies in S_xi.
std::size_t admissible_run_end(std::span<const Element> seq, std::size_t start, Ordinal xi);

/// Least number of successive S_xi sets covering seq[start..).
std::size_t cover_count(std::span<const Element> seq, std::size_t start, Ordinal xi);

/// One step of the greedy membership test read left to right. slots[0]
/// counts free places in the open S_1 node, slots[l] free S_l children of
/// the open S_{l+1} node (xi counters in all). Returns true when e opened a
/// new top-level S_xi set; for the first element (`started` false) that is
/// always the case. All counters zero afterwards means the current top-level
/// set is a maximal member.
bool greedy_push(std::uint32_t* slots, unsigned xi, Element e, bool started);

// -- Family operations. -----------------------------------------------------

bool is_member(const FinSet& f, Ordinal xi);
bool is_member(std::span<const Element> f, Ordinal xi);

/// True iff no proper superset of F lies in S_xi. Throws std::invalid_argument
/// when F is not a member. The empty set is never maximal.
///
/// Uses the single probe F + {max F + 1}: any element added to F can be
/// pushed to max F + 1 by spreading.
bool is_maximal(const FinSet& f, Ordinal xi);

/// Greedy left-to-right extraction of maximal S_xi blocks.
Decomposition decompose(const FinSet& prefix, Ordinal xi);

/// Index of the decomposition block of A + {m > max A} that contains max A.
/// Throws std::invalid_argument for the empty set.
std::size_t tau(const FinSet& a, Ordinal xi);

/// All subsets of `universe` in S_xi, in shortlex order. With `maximal_only`
/// the result keeps just the sets maximal in S_xi (relative to all of N).
/// Throws BudgetExceeded when the pruned search visits more than the budget.
std::vector<FinSet> enumerate_members(const FinSet& universe, Ordinal xi, bool maximal_only,
                                      SearchBudget budget = {});

/// Calls `visit` on every member of S_xi inside `universe` that cannot be
/// extended by any other element of `universe` (prefix-maximal), in
/// lexicographic order of the element sequences. Returns the node count.
std::uint64_t for_each_universe_maximal(const FinSet& universe, Ordinal xi,
                                        const std::function<void(const FinSet&)>& visit,
                                        SearchBudget budget = {});

/// E_0 = 1, E_{z+1} = ((z+1) E_z + 1)((2D+1)(z+2) + 1), for z < xi.
std::vector<mpz_class> constants_chain(std::uint64_t d, Ordinal xi);

}  // namespace schreier
