#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schreier {

using Element = std::int64_t;

/// A finite, strictly increasing sequence of positive integers.
///
/// The empty set is valid. Construction validates the ordering; use
/// `from_unsorted` to build from arbitrary input.
class FinSet {
 public:
  FinSet() = default;
  FinSet(std::initializer_list<Element> elems);
  explicit FinSet(std::vector<Element> elems);

  static FinSet from_unsorted(std::vector<Element> elems);
  /// Integers lo..hi inclusive (empty when hi < lo).
  static FinSet interval(Element lo, Element hi);

  bool empty() const noexcept { return elems_.empty(); }
  std::size_t size() const noexcept { return elems_.size(); }
  Element min() const;
  Element max() const;
  Element operator[](std::size_t i) const { return elems_[i]; }
  bool contains(Element e) const;

  std::span<const Element> view() const noexcept { return elems_; }
  const std::vector<Element>& elements() const noexcept { return elems_; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  /// Elements at positions [first, last).
  FinSet slice(std::size_t first, std::size_t last) const;
  FinSet with(Element e) const;
  FinSet united(const FinSet& other) const;
  bool is_subset_of(const FinSet& other) const;

  /// Bracketed textual form, e.g. "[2,3,7]".
  std::string to_string() const;
  static FinSet parse(std::string_view text);

  friend bool operator==(const FinSet&, const FinSet&) = default;
  friend auto operator<=>(const FinSet&, const FinSet&) = default;

 private:
  std::vector<Element> elems_;
};

/// max A < min B; vacuously true when either side is empty.
bool precedes(const FinSet& a, const FinSet& b);

}  // namespace schreier
