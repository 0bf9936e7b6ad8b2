#pragma once

// Truncated d_xi(L, M) and the domination checks built on it.

#include <cstdint>
#include <vector>

#include "schreier/family.hpp"
#include "schreier/norm.hpp"
#include "schreier/rational_vector.hpp"

namespace schreier {

/// Prefixes (l_1..l_N) and (m_1..m_N) with phi(l_n) = m_n.
class SubseqPair {
 public:
  SubseqPair(FinSet l, FinSet m);
  const FinSet& l() const noexcept { return l_; }
  const FinSet& m() const noexcept { return m_; }
  std::size_t size() const noexcept { return l_.size(); }

  /// phi^{-1}(A) for A inside the M prefix.
  FinSet preimage(const FinSet& a) const;
  /// sum a_i e_{l_i} and sum a_i e_{m_i}; `a` is indexed by 1..N.
  RationalVector on_l(const RationalVector& a) const;
  RationalVector on_m(const RationalVector& a) const;
  /// x supported in L, moved along phi.
  RationalVector transport(const RationalVector& x) const;

 private:
  FinSet l_, m_;
};

enum class DMode { exhaustive, heuristic };

struct DTruncation {
  Ordinal xi;
  std::size_t value = 0;
  FinSet witness;  // A in S_xi inside the M prefix, tau(phi^{-1} A) = value
  bool exact = false;
  std::uint64_t states = 0;
  /// Value for each shorter prefix: prefix_values[t-1] uses the first t terms.
  std::vector<std::size_t> prefix_values;
};

/// max tau_xi(phi^{-1} A) over A in S_xi inside the M prefix.
///
/// Membership of A and the block count of phi^{-1}(A) are both read off the
/// same streaming greedy automaton (one slot counter per level), so the
/// search is a forward DP over pairs of automaton states, position by
/// position. Counters are capped by the number of positions left, which
/// keeps the state space small. Exhaustive mode keeps every state and throws
/// BudgetExceeded past budget.max_nodes states; heuristic mode keeps the
/// `beam` best states per position and reports exact = false.
DTruncation d_truncated(const SubseqPair& pair, Ordinal xi, DMode mode, SearchBudget budget = {},
                        std::size_t beam = 64);

/// Same maximum by walking the prefix-maximal members of S_xi inside the
/// M prefix. Exponential; kept as a reference.
DTruncation d_truncated_enumerated(const SubseqPair& pair, Ordinal xi, SearchBudget budget = {});

/// ||sum a_i e_{m_i}||_xi <= p ||sum a_i e_{l_i}||_xi, exactly.
bool domination_check(const SubseqPair& pair, Ordinal xi, const RationalVector& a, std::uint64_t p);

struct RatioWitness {
  std::size_t k = 0;
  RationalVector on_l;  // sum of the first k-1 averages of phi^{-1} A
  RationalVector on_m;
  Rational norm_l, norm_m;
  FinSet a;  // the M-side set used
};

/// Vector with ||on_l||_xi <= xi + 1 and ||on_m||_xi >= k - 1. Both bounds
/// are re-checked; a failure throws BoundViolation. Throws NoWitness when
/// the prefix has no A with tau(phi^{-1} A) >= k.
RatioWitness ratio_witness(const SubseqPair& pair, Ordinal xi, std::size_t k,
                           SearchBudget budget = {});

struct GenericityRow {
  std::size_t sample = 0;
  std::size_t prefix_len = 0;
  DTruncation lm, ml;
};

/// Random splits of {1..n} into L and M, with d in both directions at every
/// prefix length up to min(|L|, |M|). Sample s draws from seed_seq{seed, s}.
std::vector<GenericityRow> genericity_demo(std::size_t n, Ordinal xi, std::size_t samples,
                                           std::uint64_t seed, SearchBudget budget = {});

}  // namespace schreier
