#include "schreier/domination.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "schreier/averages.hpp"
#include "schreier/errors.hpp"

namespace schreier {

SubseqPair::SubseqPair(FinSet l, FinSet m) : l_(std::move(l)), m_(std::move(m)) {
  if (l_.size() != m_.size())
    throw std::invalid_argument("L and M prefixes differ in length (" + std::to_string(l_.size()) +
                                " vs " + std::to_string(m_.size()) + ")");
}

FinSet SubseqPair::preimage(const FinSet& a) const {
  std::vector<Element> out;
  auto mv = m_.view();
  for (Element x : a) {
    auto it = std::lower_bound(mv.begin(), mv.end(), x);
    if (it == mv.end() || *it != x)
      throw std::invalid_argument(std::to_string(x) + " is not in the M prefix");
    out.push_back(l_[static_cast<std::size_t>(it - mv.begin())]);
  }
  return FinSet(std::move(out));
}


RationalVector SubseqPair::on_l(const RationalVector& a) const { return place_on(l_, a); }
RationalVector SubseqPair::on_m(const RationalVector& a) const { return place_on(m_, a); }

RationalVector SubseqPair::transport(const RationalVector& x) const {
  auto lv = l_.view();
  return x.reindexed([&](Element i) {
    auto it = std::lower_bound(lv.begin(), lv.end(), i);
    if (it == lv.end() || *it != i)
      throw std::invalid_argument(std::to_string(i) + " is not in the L prefix");
    return m_[static_cast<std::size_t>(it - lv.begin())];
  });
}

namespace {

struct DpState {
  std::vector<std::uint32_t> key;  // started, A counters, B counters
  std::uint32_t tau = 0;
  std::int64_t prev = -1;  // index in the previous layer
  bool took = false;
};

}  // namespace

DTruncation d_truncated(const SubseqPair& pair, Ordinal xi, DMode mode, SearchBudget budget,
                        std::size_t beam) {
  const unsigned x = xi.value;
  const std::size_t n = pair.size();
  DTruncation out{xi, 0, FinSet{}, mode == DMode::exhaustive, 0, {}};
  if (n == 0) return out;

  std::vector<std::vector<DpState>> layers(n + 1);
  layers[0].push_back({std::vector<std::uint32_t>(1 + 2 * x, 0), 0, -1, false});
  std::uint64_t total = 1;

  for (std::size_t i = 0; i < n; ++i) {
    const auto remaining = static_cast<std::uint32_t>(n - i - 1);
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    auto& next = layers[i + 1];
    auto offer = (
        [&](std::vector<std::uint32_t> key, std::uint32_t tau, std::size_t prev, bool took) {
          for (std::size_t c = 1; c < key.size(); ++c) key[c] = std::min(key[c], remaining);
          auto [it, fresh] = index.try_emplace(key, next.size());
          if (fresh) {
            next.push_back({std::move(key), tau, static_cast<std::int64_t>(prev), took});
          } else if (tau > next[it->second].tau) {
            next[it->second].tau = tau;
            next[it->second].prev = static_cast<std::int64_t>(prev);
            next[it->second].took = took;
          }
        });
    const auto& cur = layers[i];
    for (std::size_t s = 0; s < cur.size(); ++s) {
      offer(cur[s].key, cur[s].tau, s, false);
      std::vector<std::uint32_t> key = cur[s].key;
      const bool started = key[0] != 0;
      // A overflowing its top level means A left S_xi.
      if (greedy_push(key.data() + 1, x, pair.m()[i], started) && started) continue;
      bool opened = greedy_push(key.data() + 1 + x, x, pair.l()[i], started);
      key[0] = 1;
      offer(std::move(key), cur[s].tau + (opened ? 1 : 0), s, true);
    }
    if (mode == DMode::heuristic && next.size() > beam) {
      // Keep the best states; back-pointers into this layer stay valid
      // because only `next` is reordered.
      std::stable_sort(next.begin(), next.end(),
                       [](const DpState& a, const DpState& b) { return a.tau > b.tau; });
      next.resize(beam);
    }
    total += next.size();
    if (mode == DMode::exhaustive && total > budget.max_nodes)
      throw BudgetExceeded("d search exceeded " + std::to_string(budget.max_nodes) + " states");
    std::uint32_t best = 0;
    for (const auto& st : next) best = std::max(best, st.tau);
    out.prefix_values.push_back(best);
  }

  const auto& last = layers[n];
  std::size_t arg = 0;
  for (std::size_t s = 1; s < last.size(); ++s)
    if (last[s].tau > last[arg].tau) arg = s;
  out.value = last[arg].tau;
  out.states = total;

  std::vector<Element> chosen;
  std::int64_t s = static_cast<std::int64_t>(arg);
  for (std::size_t i = n; i > 0; --i) {
    const DpState& st = layers[i][static_cast<std::size_t>(s)];
    if (st.took) chosen.push_back(pair.m()[i - 1]);
    s = st.prev;
  }
  std::reverse(chosen.begin(), chosen.end());
  out.witness = FinSet(std::move(chosen));
  return out;
}

DTruncation d_truncated_enumerated(const SubseqPair& pair, Ordinal xi, SearchBudget budget) {
  DTruncation out{xi, 0, FinSet{}, true, 0, {}};
  out.states = for_each_universe_maximal(
      pair.m(), xi,
      [&](const FinSet& a) {
        std::size_t t = tau(pair.preimage(a), xi);
        if (t > out.value) {
          out.value = t;
          out.witness = a;
        }
      },
      budget);
  return out;
}

bool domination_check(const SubseqPair& pair, Ordinal xi, const RationalVector& a, std::uint64_t p) {
  Rational lhs = norm_value(pair.on_m(a), xi);
  Rational rhs = norm_value(pair.on_l(a), xi);
  return lhs <= Rational(static_cast<unsigned long>(p)) * rhs;
}

RatioWitness ratio_witness(const SubseqPair& pair, Ordinal xi, std::size_t k, SearchBudget budget) {
  if (k < 2) throw std::invalid_argument("ratio_witness needs k >= 2");
  DTruncation d = d_truncated(pair, xi, DMode::exhaustive, budget);
  if (d.value < k)
    throw NoWitness("d over this prefix is " + std::to_string(d.value) + " < " + std::to_string(k));

  // The first k-1 blocks of phi^{-1}(A) are complete maximal S_xi sets
  // inside it; their repeated averages do not depend on the tail.
  FinSet b = pair.preimage(d.witness);
  Decomposition dec = decompose(b, xi);
  RatioWitness w;
  w.k = k;
  w.a = d.witness;
  for (std::size_t i = 0; i + 1 < k; ++i) w.on_l += block_average(dec.blocks[i].view(), 0, xi).first;
  w.on_m = pair.transport(w.on_l);
  w.norm_l = norm_value(w.on_l, xi);
  w.norm_m = norm_value(w.on_m, xi);
  if (w.norm_l > Rational(xi.value + 1))
    throw BoundViolation("witness norm on L is " + to_string(w.norm_l));
  if (w.norm_m < Rational(static_cast<unsigned long>(k - 1)))
    throw BoundViolation("witness norm on M is " + to_string(w.norm_m) + " < " + std::to_string(k - 1));
  return w;
}

std::vector<GenericityRow> genericity_demo(std::size_t n, Ordinal xi, std::size_t samples,
                                           std::uint64_t seed, SearchBudget budget) {
  std::vector<std::vector<GenericityRow>> per_sample(samples);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t s = 0; s < samples; ++s) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(s)};
    std::mt19937_64 rng(seq);
    std::vector<Element> l, m;
    for (Element e = 1; e <= static_cast<Element>(n); ++e) (rng() & 1 ? l : m).push_back(e);
    const std::size_t len = std::min(l.size(), m.size());
    l.resize(len);
    m.resize(len);
    SubseqPair lm{FinSet(l), FinSet(m)}, ml{FinSet(m), FinSet(l)};
    auto dir = [&](const SubseqPair& p) {
      try {
        return d_truncated(p, xi, DMode::exhaustive, budget);
      } catch (const BudgetExceeded&) {
        return d_truncated(p, xi, DMode::heuristic, budget);
      }
    };
    DTruncation a = dir(lm), b = dir(ml);
    for (std::size_t t = 1; t <= len; ++t) {
      GenericityRow row{s, t, a, b};
      row.lm.value = a.prefix_values[t - 1];
      row.ml.value = b.prefix_values[t - 1];
      row.lm.witness = row.ml.witness = FinSet{};
      per_sample[s].push_back(std::move(row));
    }
  }
  std::vector<GenericityRow> rows;
  for (auto& v : per_sample)
    for (auto& r : v) rows.push_back(std::move(r));
  return rows;
}

}  // namespace schreier
