#pragma once

#include <utility>

#include "schreier/family.hpp"
#include "schreier/rational_vector.hpp"

namespace schreier {

/// ||x||_xi together with an admissible set attaining it.
struct NormResult {
  Rational value;
  FinSet witness;
};

/// (x(F), |x|(F)).
std::pair<Rational, Rational> evaluate(const RationalVector& x, const FinSet& f);

/// Exact ||x||_xi = max over F in S_xi of |x|(F).
///
/// The maximisation runs over subsets of supp x. For xi >= 2 it is a
/// dynamic program over "open node" states of the greedy packing: when a new
/// level-1 node opens at a support point, the state records how many sibling
/// slots remain at every level above it. Slot counts are capped at the
/// number of pieces needed to cover the rest of the support, beyond which
/// extra slots cannot help. Coefficients are scaled to a common denominator
/// and the kernel runs on __int128 when the total fits, on mpz otherwise.
///
/// Among optimal sets the witness prefers the smallest first element, then
/// the earliest next node opening, then smaller indices inside a node.
///
/// The level-1 window sums are computed in parallel batches with OpenMP.
NormResult norm(const RationalVector& x, Ordinal xi);

/// Same contract as `norm`, single-threaded. Kept as the reference the
/// parallel kernel is tested and benchmarked against.
NormResult norm_serial(const RationalVector& x, Ordinal xi);

/// Exhaustive maximisation over enumerate_members(supp x). Ties go to the
/// shortlex-first set. Throws BudgetExceeded beyond the budget.
NormResult norm_bruteforce(const RationalVector& x, Ordinal xi, SearchBudget budget = {});

/// Shorthand for norm(x, xi).value.
Rational norm_value(const RationalVector& x, Ordinal xi);

}  // namespace schreier
