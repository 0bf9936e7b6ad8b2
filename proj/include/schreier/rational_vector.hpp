#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schreier/finset.hpp"

namespace schreier {

using Rational = mpq_class;

/// Canonical lowest-terms text: "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);
/// Accepts "p", "p/q" (any sign, any common factor); result is canonical.
Rational parse_rational(std::string_view text);

/// Finitely supported vector with exact rational coordinates.
///
/// Entries are kept sorted by index with no stored zeros.
class RationalVector {
 public:
  using Entry = std::pair<Element, Rational>;

  RationalVector() = default;
  /// Builds from (index, value) pairs in any order; duplicates are summed.
  static RationalVector from_entries(std::vector<Entry> entries);
  static RationalVector unit(Element index);

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t support_size() const noexcept { return entries_.size(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  FinSet support() const;

  Rational at(Element index) const;
  /// Sets coordinate `index`; a zero value erases it.
  void set(Element index, const Rational& value);

  RationalVector& operator+=(const RationalVector& other);
  RationalVector& operator*=(const Rational& factor);
  friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
  friend RationalVector operator*(const Rational& f, RationalVector v) { return v *= f; }
  friend RationalVector operator-(const RationalVector& a, const RationalVector& b);

  RationalVector abs() const;
  /// Sum of |coefficients|.
  Rational l1() const;
  /// Largest |coefficient|; this is the order-zero norm.
  Rational linf() const;
  /// Sum of coefficients.
  Rational total() const;

  /// Moves coordinate i to index f(i); f must be strictly increasing on the support.
  RationalVector reindexed(const std::function<Element(Element)>& f) const;
  /// Coordinates restricted to `set`.
  RationalVector restricted(const FinSet& set) const;

  /// JSON object text {"index":"p/q",...} with keys in increasing index order.
  std::string to_json_text() const;

  friend bool operator==(const RationalVector&, const RationalVector&) = default;

 private:
  std::vector<Entry> entries_;
};

/// sum_i a_i e_{target_i} for `a` indexed 1..N.
RationalVector place_on(const FinSet& target, const RationalVector& a);

}  // namespace schreier
