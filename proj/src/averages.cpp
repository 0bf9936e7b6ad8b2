#include "schreier/averages.hpp"

#include <string>

#include "schreier/errors.hpp"

namespace schreier {

namespace {

// Appends the entries of the level-xi average at seq[start], scaled by
// `weight`, and returns the end of its block.
std::size_t emit(std::span<const Element> seq, std::size_t start, unsigned xi, const Rational& weight,
                 std::vector<RationalVector::Entry>& out) {
  if (xi == 0) {
    out.emplace_back(seq[start], weight);
    return start + 1;
  }
  const Element k = seq[start];
  const Rational child = weight / Rational(static_cast<long>(k));
  std::size_t pos = start;
  for (Element c = 0; c < k; ++c) pos = emit(seq, pos, xi - 1, child, out);
  return pos;
}

}  // namespace

std::pair<RationalVector, std::size_t> block_average(std::span<const Element> seq,
                                                     std::size_t start, Ordinal xi) {
  auto end = maximal_block_end(seq, start, xi);
  if (!end) throw InsufficientPrefix("block at position " + std::to_string(start + 1) + " is incomplete", 1);
  std::vector<RationalVector::Entry> entries;
  entries.reserve(*end - start);
  emit(seq, start, xi.value, Rational(1), entries);
  return {RationalVector::from_entries(std::move(entries)), *end};
}

std::size_t complete_blocks(const FinSet& m_prefix, Ordinal xi) {
  return decompose(m_prefix, xi).blocks.size();
}

std::vector<AverageBlock> repeated_averages(const FinSet& m_prefix, Ordinal xi, std::size_t count) {
  auto seq = m_prefix.view();
  std::vector<AverageBlock> out;
  std::size_t pos = 0;
  for (std::size_t n = 1; n <= count; ++n) {
    auto end = maximal_block_end(seq, pos, xi);
    if (!end)
      throw InsufficientPrefix("prefix " + m_prefix.to_string() + " does not complete S_" +
                                   std::to_string(xi.value) + " block " + std::to_string(n),
                               n);
    auto [vec, stop] = block_average(seq, pos, xi);
    out.push_back({xi, n, m_prefix.slice(pos, stop), std::move(vec)});
    pos = stop;
  }
  return out;
}

NormResult average_sum_norm(const FinSet& m_prefix, Ordinal xi, std::size_t n) {
  RationalVector sum;
  for (auto& b : repeated_averages(m_prefix, xi, n)) sum += b.vector;
  NormResult r = norm(sum, xi);
  if (r.value > Rational(xi.value + 1))
    throw BoundViolation("||sum of " + std::to_string(n) + " averages||_" + std::to_string(xi.value) +
                         " = " + to_string(r.value) + " exceeds " + std::to_string(xi.value + 1));
  return r;
}

}  // namespace schreier
