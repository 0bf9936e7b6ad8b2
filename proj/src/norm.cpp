#include "schreier/norm.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>

namespace schreier {

std::pair<Rational, Rational> evaluate(const RationalVector& x, const FinSet& f) {
  Rational signed_sum = 0, abs_sum = 0;
  for (Element e : f) {
    Rational v = x.at(e);
    signed_sum += v;
    abs_sum += ::abs(v);
  }
  return {signed_sum, abs_sum};
}

namespace {

using i128 = __int128;

// |x| scaled to integers over a common denominator.
struct ScaledWeights {
  std::vector<Element> values;
  std::vector<mpz_class> weights;
  mpz_class denominator = 1;
  mpz_class total = 0;
};

ScaledWeights scale(const RationalVector& x) {
  ScaledWeights sw;
  for (const auto& [idx, v] : x.entries()) {
    mpz_lcm(sw.denominator.get_mpz_t(), sw.denominator.get_mpz_t(), v.get_den_mpz_t());
    sw.values.push_back(idx);
  }
  for (const auto& [idx, v] : x.entries()) {
    mpz_class w = ::abs(v.get_num()) * (sw.denominator / v.get_den());
    sw.total += w;
    sw.weights.push_back(std::move(w));
  }
  return sw;
}

i128 to_i128(const mpz_class& z) {
  mpz_class hi = z >> 64;
  mpz_class lo = z - (hi << 64);
  return (static_cast<i128>(hi.get_ui()) << 64) | static_cast<i128>(lo.get_ui());
}

mpz_class from_i128(i128 v) {
  auto hi = static_cast<unsigned long>(static_cast<unsigned __int128>(v) >> 64);
  auto lo = static_cast<unsigned long>(static_cast<unsigned __int128>(v));
  return (mpz_class(hi) << 64) + mpz_class(lo);
}

mpz_class to_mpz(const i128& v) { return from_i128(v); }
mpz_class to_mpz(const mpz_class& v) { return v; }

// Orders (weight, position) pairs best-first: heavier, then earlier.
template <class W>
struct Item {
  W weight;
  std::size_t pos;
};

template <class W>
bool better(const Item<W>& a, const Item<W>& b) {
  return a.weight > b.weight || (a.weight == b.weight && a.pos < b.pos);
}

std::size_t slots(Element value, std::size_t limit) {
  // value - 1 remaining children, never more than there are points left.
  auto v = static_cast<std::uint64_t>(value - 1);
  return static_cast<std::size_t>(std::min<std::uint64_t>(v, limit));
}

template <class W>
class PackingKernel {
 public:
  PackingKernel(std::span<const Element> s, std::span<const W> w, unsigned xi, bool parallel)
      : s_(s), w_(w), xi_(xi), k_(s.size()), parallel_(parallel) {}

  // Returns the optimum and the chosen support positions.
  std::pair<W, std::vector<std::size_t>> solve() {
    if (k_ == 0) return {W(0), {}};
    if (xi_ == 0) return solve_singleton();
    if (xi_ == 1) return parallel_ ? solve_first_order_fenwick() : solve_first_order_direct();
    return solve_general();
  }

 private:
  std::span<const Element> s_;
  std::span<const W> w_;
  unsigned xi_;
  std::size_t k_;
  bool parallel_;

  // The r best positions in [from, to), best-first.
  std::vector<std::size_t> top_positions(std::size_t from, std::size_t to, std::size_t r) const {
    std::vector<Item<W>> items;
    for (std::size_t p = from; p < to; ++p) items.push_back({w_[p], p});
    r = std::min(r, items.size());
    std::partial_sort(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(r), items.end(),
                      better<W>);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < r; ++i) out.push_back(items[i].pos);
    return out;
  }

  std::pair<W, std::vector<std::size_t>> solve_singleton() const {
    std::size_t best = 0;
    for (std::size_t p = 1; p < k_; ++p)
      if (w_[p] > w_[best]) best = p;
    return {w_[best], {best}};
  }

  std::pair<W, std::vector<std::size_t>> first_order_witness(std::size_t j) const {
    auto pos = top_positions(j + 1, k_, slots(s_[j], k_));
    pos.push_back(j);
    std::sort(pos.begin(), pos.end());
    W total = 0;
    for (auto p : pos) total += w_[p];
    return {total, pos};
  }

  std::pair<W, std::vector<std::size_t>> solve_first_order_direct() const {
    std::size_t best_j = 0;
    W best = 0;
    for (std::size_t j = 0; j < k_; ++j) {
      W v = first_order_witness(j).first;
      if (j == 0 || v > best) {
        best = v;
        best_j = j;
      }
    }
    return first_order_witness(best_j);
  }

  // O(k log k): sweep j downwards keeping the later points in a Fenwick tree
  // indexed by best-first rank, so "sum of the r best" is a prefix query.
  std::pair<W, std::vector<std::size_t>> solve_first_order_fenwick() const {
    std::vector<Item<W>> order;
    for (std::size_t p = 0; p < k_; ++p) order.push_back({w_[p], p});
    std::sort(order.begin(), order.end(), better<W>);
    std::vector<std::size_t> rank(k_);
    for (std::size_t r = 0; r < k_; ++r) rank[order[r].pos] = r + 1;

    std::vector<std::size_t> cnt(k_ + 1, 0);
    std::vector<W> sum(k_ + 1, W(0));
    std::size_t present = 0;
    W present_sum = 0;
    std::size_t high = 1;
    while (high * 2 <= k_) high *= 2;

    auto top_sum = [&](std::size_t r) -> W {
      if (r >= present) return present_sum;
      std::size_t pos = 0, c = 0;
      W acc = 0;
      for (std::size_t step = high; step > 0; step /= 2) {
        if (pos + step <= k_ && c + cnt[pos + step] <= r) {
          pos += step;
          c += cnt[pos];
          acc += sum[pos];
        }
      }
      return acc;
    };

    std::size_t best_j = k_ - 1;
    W best = w_[k_ - 1];
    for (std::size_t jj = k_; jj-- > 0;) {
      W v = w_[jj] + top_sum(slots(s_[jj], k_));
      if (v >= best) {
        best = v;
        best_j = jj;
      }
      for (std::size_t i = rank[jj]; i <= k_; i += i & (~i + 1)) {
        cnt[i] += 1;
        sum[i] += w_[jj];
      }
      ++present;
      present_sum += w_[jj];
    }
    return first_order_witness(best_j);
  }

  // --- xi >= 2 -------------------------------------------------------------

  // cap_[l][j]: pieces of order l needed to cover positions [j, k).
  std::vector<std::vector<std::size_t>> cover_;
  // Per position j: radix of each counter (levels 2..xi) and flat tables.
  struct Layer {
    std::vector<std::size_t> radix;
    std::vector<W> value;
    std::vector<std::uint32_t> next;  // next node opening; k_ means none
    std::vector<std::uint32_t> next_state;
  };
  std::vector<Layer> layers_;

  std::size_t counter_cap(unsigned level, std::size_t j) const {
    // Counter at `level` counts children of order level-1 after position j.
    return cover_[level - 1][j + 1];
  }

  std::size_t encode(const Layer& layer, const std::vector<std::size_t>& c) const {
    std::size_t idx = 0;
    for (std::size_t d = c.size(); d-- > 0;) idx = idx * layer.radix[d] + c[d];
    return idx;
  }

  void decode(const Layer& layer, std::size_t idx, std::vector<std::size_t>& c) const {
    c.resize(layer.radix.size());
    for (std::size_t d = 0; d < c.size(); ++d) {
      c[d] = idx % layer.radix[d];
      idx /= layer.radix[d];
    }
  }

  // State after opening a level-1 node at e, coming from counters c.
  bool transition(const std::vector<std::size_t>& c, std::size_t e,
                  std::vector<std::size_t>& out) const {
    std::size_t lowest = c.size();
    for (std::size_t d = 0; d < c.size(); ++d)
      if (c[d] > 0) {
        lowest = d;
        break;
      }
    if (lowest == c.size()) return false;
    out = c;
    out[lowest] -= 1;
    for (std::size_t d = 0; d < lowest; ++d) out[d] = slots(s_[e], k_);
    const Layer& target = layers_[e];
    for (std::size_t d = 0; d < out.size(); ++d) out[d] = std::min(out[d], target.radix[d] - 1);
    return true;
  }

  void window_sums(std::size_t j, std::vector<W>& t) const {
    // t[e - j - 1] = best sum of at most r points in (j, e), e in (j, k].
    const std::size_t r = slots(s_[j], k_);
    t.assign(k_ - j, W(0));
    auto worse_first = [](const Item<W>& a, const Item<W>& b) { return better(a, b); };
    std::priority_queue<Item<W>, std::vector<Item<W>>, decltype(worse_first)> heap(worse_first);
    W acc = 0;
    for (std::size_t e = j + 1; e <= k_; ++e) {
      t[e - j - 1] = acc;
      if (e == k_ || r == 0) continue;
      Item<W> it{w_[e], e};
      if (heap.size() < r) {
        heap.push(it);
        acc += it.weight;
      } else if (better(it, heap.top())) {
        acc -= heap.top().weight;
        heap.pop();
        heap.push(it);
        acc += it.weight;
      }
    }
  }

  void fill_layer(std::size_t j, const std::vector<W>& t) {
    Layer& layer = layers_[j];
    const std::size_t states = layer.value.size();
    auto body = [&](std::size_t st) {
      std::vector<std::size_t> c, c2;
      decode(layer, st, c);
      W best = t[k_ - j - 1];
      std::uint32_t best_e = static_cast<std::uint32_t>(k_);
      std::uint32_t best_state = 0;
      bool have = true;
      for (std::size_t e = j + 1; e < k_; ++e) {
        if (!transition(c, e, c2)) break;
        std::size_t idx = encode(layers_[e], c2);
        W cand = t[e - j - 1] + layers_[e].value[idx];
        if (!have || cand > best) {
          best = cand;
          best_e = static_cast<std::uint32_t>(e);
          best_state = static_cast<std::uint32_t>(idx);
          have = true;
        }
      }
      layer.value[st] = w_[j] + best;
      layer.next[st] = best_e;
      layer.next_state[st] = best_state;
    };
    if (parallel_ && states * (k_ - j) > 4096) {
#pragma omp parallel for schedule(dynamic)
      for (std::size_t st = 0; st < states; ++st) body(st);
    } else {
      for (std::size_t st = 0; st < states; ++st) body(st);
    }
  }

  std::pair<W, std::vector<std::size_t>> solve_general() {
    cover_.assign(xi_, std::vector<std::size_t>(k_ + 1, 0));
    for (unsigned l = 1; l < xi_; ++l)
      for (std::size_t j = k_; j-- > 0;)
        cover_[l][j] = 1 + cover_[l][admissible_run_end(s_, j, Ordinal{l})];

    layers_.assign(k_, Layer{});
    for (std::size_t j = 0; j < k_; ++j) {
      Layer& layer = layers_[j];
      std::size_t states = 1;
      for (unsigned level = 2; level <= xi_; ++level) {
        layer.radix.push_back(counter_cap(level, j) + 1);
        states *= layer.radix.back();
      }
      layer.value.assign(states, W(0));
      layer.next.assign(states, 0);
      layer.next_state.assign(states, 0);
    }

    if (parallel_) {
      constexpr std::size_t batch = 64;
      std::vector<std::vector<W>> windows(batch);
      for (std::size_t hi = k_; hi > 0;) {
        const std::size_t lo = hi > batch ? hi - batch : 0;
#pragma omp parallel for schedule(dynamic)
        for (std::size_t j = lo; j < hi; ++j) window_sums(j, windows[j - lo]);
        for (std::size_t j = hi; j-- > lo;) fill_layer(j, windows[j - lo]);
        hi = lo;
      }
    } else {
      std::vector<W> t;
      for (std::size_t j = k_; j-- > 0;) {
        window_sums(j, t);
        fill_layer(j, t);
      }
    }

    std::size_t best_j = 0, best_state = 0;
    W best = 0;
    std::vector<std::size_t> c;
    for (std::size_t j = 0; j < k_; ++j) {
      const Layer& layer = layers_[j];
      c.assign(layer.radix.size(), 0);
      for (std::size_t d = 0; d < c.size(); ++d) c[d] = std::min(slots(s_[j], k_), layer.radix[d] - 1);
      std::size_t st = encode(layer, c);
      if (j == 0 || layer.value[st] > best) {
        best = layer.value[st];
        best_j = j;
        best_state = st;
      }
    }

    std::vector<std::size_t> chosen;
    for (std::size_t j = best_j, st = best_state;;) {
      const Layer& layer = layers_[j];
      std::size_t e = layer.next[st];
      chosen.push_back(j);
      for (auto p : top_positions(j + 1, e, slots(s_[j], k_))) chosen.push_back(p);
      if (e >= k_) break;
      st = layer.next_state[st];
      j = e;
    }
    std::sort(chosen.begin(), chosen.end());
    return {best, chosen};
  }
};

template <class W>
NormResult run_kernel(const ScaledWeights& sw, std::vector<W> w, Ordinal xi, bool parallel) {
  PackingKernel<W> kernel(sw.values, w, xi.value, parallel);
  auto [value, positions] = kernel.solve();
  std::vector<Element> elems;
  for (auto p : positions) elems.push_back(sw.values[p]);
  return {Rational(to_mpz(value), sw.denominator), FinSet(std::move(elems))};
}

NormResult dispatch(const RationalVector& x, Ordinal xi, bool parallel) {
  if (x.empty()) return {Rational(0), FinSet{}};
  ScaledWeights sw = scale(x);
  NormResult r;
  if (mpz_sizeinbase(sw.total.get_mpz_t(), 2) < 120) {
    std::vector<i128> w;
    w.reserve(sw.weights.size());
    for (const auto& z : sw.weights) w.push_back(to_i128(z));
    r = run_kernel<i128>(sw, std::move(w), xi, parallel);
  } else {
    r = run_kernel<mpz_class>(sw, sw.weights, xi, parallel);
  }
  r.value.canonicalize();
  return r;
}

}  // namespace

NormResult norm(const RationalVector& x, Ordinal xi) { return dispatch(x, xi, true); }

NormResult norm_serial(const RationalVector& x, Ordinal xi) { return dispatch(x, xi, false); }

Rational norm_value(const RationalVector& x, Ordinal xi) { return norm(x, xi).value; }

NormResult norm_bruteforce(const RationalVector& x, Ordinal xi, SearchBudget budget) {
  NormResult best{Rational(0), FinSet{}};
  for (const FinSet& f : enumerate_members(x.support(), xi, false, budget)) {
    Rational v = evaluate(x, f).second;
    if (v > best.value) best = {v, f};
  }
  return best;
}

}  // namespace schreier
