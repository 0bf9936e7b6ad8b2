#include "schreier/finset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace schreier {

namespace {

void validate(const std::vector<Element>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1) throw std::invalid_argument("FinSet elements must be positive");
    if (i > 0 && v[i - 1] >= v[i])
      throw std::invalid_argument("FinSet elements must be strictly increasing");
  }
}

}  // namespace

FinSet::FinSet(std::initializer_list<Element> elems) : elems_(elems) { validate(elems_); }

FinSet::FinSet(std::vector<Element> elems) : elems_(std::move(elems)) { validate(elems_); }

FinSet FinSet::from_unsorted(std::vector<Element> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return FinSet(std::move(elems));
}

FinSet FinSet::interval(Element lo, Element hi) {
  std::vector<Element> v;
  if (hi >= lo) {
    v.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (Element e = lo; e <= hi; ++e) v.push_back(e);
  }
  return FinSet(std::move(v));
}

Element FinSet::min() const {
  if (elems_.empty()) throw std::logic_error("min of empty FinSet");
  return elems_.front();
}

Element FinSet::max() const {
  if (elems_.empty()) throw std::logic_error("max of empty FinSet");
  return elems_.back();
}

bool FinSet::contains(Element e) const {
  return std::binary_search(elems_.begin(), elems_.end(), e);
}

FinSet FinSet::slice(std::size_t first, std::size_t last) const {
  FinSet out;
  out.elems_.assign(elems_.begin() + static_cast<std::ptrdiff_t>(first),
                    elems_.begin() + static_cast<std::ptrdiff_t>(last));
  return out;
}

FinSet FinSet::with(Element e) const {
  auto v = elems_;
  v.push_back(e);
  return from_unsorted(std::move(v));
}

FinSet FinSet::united(const FinSet& other) const {
  FinSet out;
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                 std::back_inserter(out.elems_));
  return out;
}

bool FinSet::is_subset_of(const FinSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

std::string FinSet::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) os << ',';
    os << elems_[i];
  }
  os << ']';
  return os.str();
}

FinSet FinSet::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("set literal must look like [1,2,3]: " + std::string(text));
  text = trim(text.substr(1, text.size() - 2));
  std::vector<Element> v;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto tok = trim(text.substr(0, comma));
    Element e{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), e);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw std::invalid_argument("bad set element: " + std::string(tok));
    v.push_back(e);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return FinSet(std::move(v));
}

bool precedes(const FinSet& a, const FinSet& b) {
  return a.empty() || b.empty() || a.max() < b.min();
}

}  // namespace schreier
