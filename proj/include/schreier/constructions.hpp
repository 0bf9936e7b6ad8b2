#pragma once

// Finite versions of the block-basis constructions and the inequalities
// they rest on. Every check is exact and returns the observed quantities
// next to the bound.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schreier/family.hpp"
#include "schreier/norm.hpp"
#include "schreier/rational_vector.hpp"

namespace schreier {

// -- Interlaced subsequences ---------------------------------------------------

struct InterlaceResult {
  Rational norm_l, norm_m;
  bool pass = false;  // norm_l <= norm_m <= 2 norm_l
};

/// Throws HypothesisNotSatisfied unless l_i < m_i < l_{i+1}.
InterlaceResult interlace_check(const FinSet& l, const FinSet& m, const RationalVector& a, Ordinal xi);

// -- Averages against markers ------------------------------------------------------

struct AveragesEquivalence {
  Rational averages_norm;  // ||sum a_i zeta_i^L||_xi
  Rational markers_norm;   // ||sum a_i e_{q_i}||_{xi-zeta}, q_i = min of block i
  Rational maxima_norm;    // ||sum a_i e_{k_i}||_{xi-zeta}, k_i = max of block i
  Rational constant;       // 12(zeta+1)
  bool lower = false, upper = false, intermediate = false;
  bool pass() const { return lower && upper && intermediate; }
};

/// `a` is indexed by block number. Checks markers <= averages <=
/// 12(zeta+1) markers, and averages <= 6(zeta+1) maxima. Throws
/// InsufficientPrefix when L does not complete the blocks a needs.
AveragesEquivalence averages_equivalence_check(const FinSet& l_prefix, Ordinal zeta, Ordinal xi,
                                               const RationalVector& a);

// -- Combination bound -----------------------------------------------------

struct CombinationResult {
  Rational c;         // hypothesis constant in use
  Rational observed;  // |(sum a_i x_i)(G_1 u .. u G_q)|
  bool pass = false;  // observed <= 3c
};

/// Smallest C for which the hypothesis holds: the largest
/// |(sum_{i in I} a_i x_i)(U_{j in J} G_j)| over pairs (I, J) in which every
/// chosen block meets exactly one chosen G (or, symmetrically, every chosen
/// G meets exactly one chosen block). For fixed J the best I is all
/// positive or all negative terms, so only one side is enumerated.
Rational combination_hypothesis_constant(const std::vector<RationalVector>& x,
                                         const std::vector<FinSet>& g, const std::vector<Rational>& a);

/// Throws HypothesisNotSatisfied when `c` is below the hypothesis constant
/// or the blocks / sets are not successive.
CombinationResult combination_bound_check(const std::vector<RationalVector>& x,
                                          const std::vector<FinSet>& g, const std::vector<Rational>& a,
                                          const Rational& c);

// -- Decaying blocks ----------------------------------------------------------

struct DecayResult {
  Rational observed;  // |(sum a_i x_i)(H)|
  Rational bound;     // (2 + b) max |a_i|
  bool pass = false;
};

/// Requires 1 <= zeta <= xi, successive blocks, ||x_n||_xi < b,
/// ||x_n||_{zeta-1} < 2^{-max supp x_{n-1}} and H in S_zeta; otherwise
/// throws HypothesisNotSatisfied.
DecayResult decay_bound_check(const std::vector<RationalVector>& x, Ordinal zeta, Ordinal xi,
                              const Rational& b, const std::vector<Rational>& a, const FinSet& h);

// -- Subsequences equivalent to lower-order unit vectors ---------------------------

struct BlockSubsequenceWitness {
  unsigned zeta = 0;
  std::vector<std::size_t> indices;  // n_i, 0-based into the block list
  std::vector<Element> markers;      // m_i
  Rational lower_constant;           // 1/delta
  Rational upper_constant;           // 12(2+b), or 4b when zeta = 0
};

/// zeta is the least level with min_n ||x_n||_zeta > delta. For zeta >= 1
/// the subsequence is taken greedily so that ||x_{n_i}||_{zeta-1} <
/// 2^{-max supp x_{n_{i-1}}}; m_i is the least element of a norming set of
/// x_{n_i} in S_zeta. Throws HypothesisNotSatisfied when some ||x_n||_xi >= b
/// or no level qualifies.
BlockSubsequenceWitness block_subsequence_witness(const std::vector<RationalVector>& x, Ordinal xi,
                                                  const Rational& delta, const Rational& b);

struct EquivalenceResult {
  Rational blocks_norm;   // ||sum a_i x_{n_i}||_xi
  Rational markers_norm;  // ||sum a_i e_{m_i}||_{xi-zeta}
  bool pass = false;
};

EquivalenceResult block_subsequence_check(const BlockSubsequenceWitness& w,
                                          const std::vector<RationalVector>& x, Ordinal xi,
                                          const RationalVector& a);

// -- Complemented convex block basis -------------------------------------------

struct ComplementedBasis {
  Ordinal xi;
  std::vector<FinSet> f;          // integer intervals
  std::vector<RationalVector> u;  // supp u_n = F_n
};

/// F_n starts at max({k(n+k)^2 : k < n} u {max F_{n-1}}) + 1 and consists of
/// n^2 consecutive maximal S_{xi-1} blocks; u_n averages their repeated
/// averages. Throws BudgetExceeded if some F_n would exceed `element_cap`
/// elements.
ComplementedBasis build_complemented_basis(Ordinal xi, std::size_t count,
                                           std::uint64_t element_cap = 1'000'000);

/// sum_i x(F_i) u_i.
RationalVector project_onto_basis(const RationalVector& x, const ComplementedBasis& basis);

struct BasisReport {
  std::string claim;
  std::size_t n = 0;
  Rational bound, observed;
  bool pass = false;
};

/// Every structural invariant of the basis, one line each.
std::vector<BasisReport> basis_invariants(const ComplementedBasis& basis);

/// F_{n+1} u .. u F_{n+k} in S_xi, which together with convexity makes
/// (u_{n+1}, .., u_{n+k}) isometric to the unit vector basis of l_1^k.
/// Indices are 1-based.
bool l1_block_certificate(const ComplementedBasis& basis, std::size_t n, std::size_t k);

/// Least n with min F_n > k (n+k)^2 having F_{n+1} .. F_{n+k} built, or
/// nullopt.
std::optional<std::size_t> l1_start_index(const ComplementedBasis& basis, std::size_t k);

// -- Candidate uncomplemented basis ---------------------------------------------

struct UncomplementedExample {
  Ordinal xi;
  FinSet m_prefix;
  std::vector<Element> q;        // q_n = min F_n^xi(M)
  std::vector<Rational> a;       // a_n = 1 / ceil(log2(n+1))
  std::vector<RationalVector> u, v, w;
};

/// u_n = v_n + w_n with v_n = a_n e_{q_n} and w_n the rest of xi_n^M
/// rescaled to mass 1 - a_n. M runs through consecutive integers from
/// `head` for as long as the first `count` blocks need; beyond that it is
/// understood to continue sparsely (m_j = j^2 + head), which the built
/// blocks never see. Throws BudgetExceeded past `element_cap`.
UncomplementedExample build_uncomplemented(Ordinal xi, std::size_t count, Element head = 12,
                                           std::uint64_t element_cap = 1'000'000);

/// End (exclusive) of the maximal S_xi block of consecutive integers that
/// starts at p, or nullopt when it would pass `limit`.
std::optional<Element> interval_block_end(Element p, Ordinal xi, Element limit);

}  // namespace schreier
