#include "schreier/rational_vector.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace schreier {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("bad rational literal: \"" + s + "\""); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto is_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw bad();
  Rational q(n, d);
  q.canonicalize();
  return q;
}

RationalVector RationalVector::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  RationalVector v;
  for (auto& [idx, val] : entries) {
    if (idx < 1) throw std::invalid_argument("vector indices must be positive");
    if (!v.entries_.empty() && v.entries_.back().first == idx)
      v.entries_.back().second += val;
    else
      v.entries_.emplace_back(idx, std::move(val));
  }
  std::erase_if(v.entries_, [](const Entry& e) { return e.second == 0; });
  return v;
}

RationalVector RationalVector::unit(Element index) { return from_entries({{index, Rational(1)}}); }

FinSet RationalVector::support() const {
  std::vector<Element> s;
  s.reserve(entries_.size());
  for (const auto& e : entries_) s.push_back(e.first);
  return FinSet(std::move(s));
}

Rational RationalVector::at(Element index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, Element i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return 0;
}

void RationalVector::set(Element index, const Rational& value) {
  if (index < 1) throw std::invalid_argument("vector indices must be positive");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, Element i) { return e.first < i; });
  bool present = it != entries_.end() && it->first == index;
  if (value == 0) {
    if (present) entries_.erase(it);
  } else if (present) {
    it->second = value;
  } else {
    entries_.insert(it, {index, value});
  }
}

RationalVector& RationalVector::operator+=(const RationalVector& other) {
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational s = a->second + b->second;
      if (s != 0) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& factor) {
  if (factor == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& e : entries_) e.second *= factor;
  return *this;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  return a + Rational(-1) * b;
}

RationalVector RationalVector::abs() const {
  RationalVector out = *this;
  for (auto& e : out.entries_) e.second = ::abs(e.second);
  return out;
}

Rational RationalVector::l1() const {
  Rational s = 0;
  for (const auto& e : entries_) s += ::abs(e.second);
  return s;
}

Rational RationalVector::linf() const {
  Rational m = 0;
  for (const auto& e : entries_) m = std::max<Rational>(m, ::abs(e.second));
  return m;
}

Rational RationalVector::total() const {
  Rational s = 0;
  for (const auto& e : entries_) s += e.second;
  return s;
}

RationalVector RationalVector::reindexed(const std::function<Element(Element)>& f) const {
  RationalVector out;
  out.entries_.reserve(entries_.size());
  for (const auto& [i, v] : entries_) {
    Element j = f(i);
    if (!out.entries_.empty() && out.entries_.back().first >= j)
      throw std::invalid_argument("reindexing map must be strictly increasing");
    out.entries_.emplace_back(j, v);
  }
  return out;
}

RationalVector RationalVector::restricted(const FinSet& set) const {
  RationalVector out;
  for (const auto& e : entries_)
    if (set.contains(e.first)) out.entries_.push_back(e);
  return out;
}

std::string RationalVector::to_json_text() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << '"' << entries_[i].first << "\":\"" << to_string(entries_[i].second) << '"';
  }
  os << '}';
  return os.str();
}

RationalVector place_on(const FinSet& target, const RationalVector& a) {
  std::vector<RationalVector::Entry> e;
  for (const auto& [i, v] : a.entries()) {
    if (i < 1 || static_cast<std::size_t>(i) > target.size())
      throw std::invalid_argument("coefficient index " + std::to_string(i) + " outside 1.." +
                                  std::to_string(target.size()));
    e.emplace_back(target[static_cast<std::size_t>(i - 1)], v);
  }
  return RationalVector::from_entries(std::move(e));
}

}  // namespace schreier
