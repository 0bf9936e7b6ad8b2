#pragma once

// Repeated averages xi_n^M for finite xi, built from a finite prefix of M.

#include <vector>

#include "schreier/family.hpp"
#include "schreier/norm.hpp"
#include "schreier/rational_vector.hpp"

namespace schreier {

/// xi_n^M. Coefficients are positive, sum to 1, and live exactly on the
/// n-th maximal S_xi block of M.
struct AverageBlock {
  Ordinal xi;
  std::size_t n = 0;  // 1-based
  FinSet support;
  RationalVector vector;
};

/// The first `count` repeated averages of M at level xi. A level z+1 block
/// starting at p is the uniform average of the p level-z blocks it is made
/// of. Throws InsufficientPrefix when block `count` is not complete.
std::vector<AverageBlock> repeated_averages(const FinSet& m_prefix, Ordinal xi, std::size_t count);

/// The average sitting on the maximal S_xi block that starts at seq[start].
/// Returns the vector and the end position of the block.
std::pair<RationalVector, std::size_t> block_average(std::span<const Element> seq,
                                                     std::size_t start, Ordinal xi);

/// Number of complete maximal S_xi blocks in the prefix.
std::size_t complete_blocks(const FinSet& m_prefix, Ordinal xi);

/// ||xi_1^M + ... + xi_n^M||_xi. Throws BoundViolation above xi + 1.
NormResult average_sum_norm(const FinSet& m_prefix, Ordinal xi, std::size_t n);

}  // namespace schreier
