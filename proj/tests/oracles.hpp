#pragma once

// Test-side references. Nothing here calls the greedy routines in the
// library: membership is decided by trying every partition.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "schreier/rational_vector.hpp"

namespace oracle {

using schreier::Element;
using schreier::Rational;
using schreier::RationalVector;

bool member(const std::vector<Element>& f, unsigned xi);

// f[from..] splits into at most `pieces` successive members of S_{xi}.
inline bool splits(const std::vector<Element>& f, std::size_t from, std::int64_t pieces, unsigned xi) {
  if (from == f.size()) return true;
  if (pieces <= 0) return false;
  for (std::size_t to = from + 1; to <= f.size(); ++to) {
    std::vector<Element> piece(f.begin() + static_cast<std::ptrdiff_t>(from),
                               f.begin() + static_cast<std::ptrdiff_t>(to));
    if (member(piece, xi) && splits(f, to, pieces - 1, xi)) return true;
  }
  return false;
}

inline bool member(const std::vector<Element>& f, unsigned xi) {
  if (f.size() <= 1) return true;
  if (xi == 0) return false;
  return splits(f, 0, f.front(), xi - 1);
}

// No superset inside [1, max F + reach] is a member. Spreading makes
// reach = 1 sufficient; the wider probe does not rely on that.
inline bool maximal(const std::vector<Element>& f, unsigned xi, Element reach = 4) {
  if (f.empty() || !member(f, xi)) return false;
  for (Element x = 1; x <= f.back() + reach; ++x) {
    if (std::find(f.begin(), f.end(), x) != f.end()) continue;
    std::vector<Element> g = f;
    g.insert(std::upper_bound(g.begin(), g.end(), x), x);
    if (member(g, xi)) return false;
  }
  return true;
}

// max over all member subsets of the support.
inline Rational norm(const RationalVector& x, unsigned xi) {
  const auto& e = x.entries();
  const std::size_t k = e.size();
  Rational best = 0;
  std::vector<Element> f;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    f.clear();
    Rational s = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) {
        f.push_back(e[i].first);
        s += abs(e[i].second);
      }
    if (s > best && member(f, xi)) best = s;
  }
  return best;
}

// Seeded random vectors with small support and small rationals.
inline RationalVector random_vector(std::mt19937_64& rng, std::size_t max_support, Element max_index,
                                    long max_num = 9, long max_den = 6) {
  std::uniform_int_distribution<std::size_t> len(0, max_support);
  std::uniform_int_distribution<Element> idx(1, max_index);
  std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
  std::vector<RationalVector::Entry> entries;
  for (std::size_t n = len(rng); n > 0; --n) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    entries.emplace_back(idx(rng), q);
  }
  return RationalVector::from_entries(std::move(entries));
}

}  // namespace oracle

namespace oracle {

// tau by definition: decompose A + {max A + 1, ...} into longest member
// prefixes and report the block holding max A. Only for tiny cases: the
// tail must be long enough to close every block touching A.
inline std::size_t tau(const std::vector<Element>& a, unsigned xi, Element tail = 40) {
  std::vector<Element> seq = a;
  for (Element t = 1; t <= tail; ++t) seq.push_back(a.back() + t);
  std::size_t pos = 0, block = 0;
  while (pos < a.size()) {
    std::size_t len = 1;
    while (pos + len < seq.size()) {
      std::vector<Element> probe(seq.begin() + static_cast<std::ptrdiff_t>(pos),
                                 seq.begin() + static_cast<std::ptrdiff_t>(pos + len + 1));
      if (!member(probe, xi)) break;
      ++len;
    }
    pos += len;
    ++block;
  }
  return block;
}

}  // namespace oracle

namespace oracle {

// Hypothesis constant of the combination bound, by trying every (I, J) and
// testing both conditions exactly as stated.
inline Rational combination_constant(const std::vector<RationalVector>& x,
                                     const std::vector<std::vector<Element>>& g,
                                     const std::vector<Rational>& a) {
  const std::size_t p = x.size(), q = g.size();
  auto meets = [&](std::size_t i, std::size_t j) {
    for (Element e : g[j])
      if (x[i].at(e) != 0) return true;
    return false;
  };
  auto before = [](const std::vector<std::size_t>& s, const std::vector<std::size_t>& t) {
    return s.empty() || t.empty() || s.back() < t.front();
  };
  Rational best = 0;
  for (std::uint64_t im = 0; im < (std::uint64_t{1} << p); ++im)
    for (std::uint64_t jm = 0; jm < (std::uint64_t{1} << q); ++jm) {
      std::vector<std::size_t> ii, jj;
      for (std::size_t i = 0; i < p; ++i)
        if (im >> i & 1) ii.push_back(i);
      for (std::size_t j = 0; j < q; ++j)
        if (jm >> j & 1) jj.push_back(j);
      // Condition 1: I is the union of the ordered I_j.
      bool c1 = true;
      {
        std::vector<std::vector<std::size_t>> parts;
        std::vector<std::size_t> cover;
        for (auto j : jj) {
          std::vector<std::size_t> part;
          for (auto i : ii)
            if (meets(i, j)) part.push_back(i);
          parts.push_back(part);
          cover.insert(cover.end(), part.begin(), part.end());
        }
        std::sort(cover.begin(), cover.end());
        cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
        c1 = cover == ii;
        for (std::size_t s = 0; c1 && s < parts.size(); ++s)
          for (std::size_t t = s + 1; c1 && t < parts.size(); ++t) c1 = before(parts[s], parts[t]);
      }
      bool c2 = true;
      {
        std::vector<std::vector<std::size_t>> parts;
        std::vector<std::size_t> cover;
        for (auto i : ii) {
          std::vector<std::size_t> part;
          for (auto j : jj)
            if (meets(i, j)) part.push_back(j);
          parts.push_back(part);
          cover.insert(cover.end(), part.begin(), part.end());
        }
        std::sort(cover.begin(), cover.end());
        cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
        c2 = cover == jj;
        for (std::size_t s = 0; c2 && s < parts.size(); ++s)
          for (std::size_t t = s + 1; c2 && t < parts.size(); ++t) c2 = before(parts[s], parts[t]);
      }
      if (!c1 && !c2) continue;
      Rational v = 0;
      for (auto i : ii)
        for (auto j : jj)
          for (Element e : g[j]) v += a[i] * x[i].at(e);
      best = std::max<Rational>(best, abs(v));
    }
  return best;
}

}  // namespace oracle
