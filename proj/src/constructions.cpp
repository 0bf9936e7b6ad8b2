#include "schreier/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "schreier/averages.hpp"
#include "schreier/errors.hpp"

namespace schreier {

namespace {

Rational power_of_two_inverse(Element k) {
  mpz_class den = 1;
  den <<= static_cast<mp_bitcnt_t>(k);
  return Rational(mpz_class(1), den);
}

bool successive(const std::vector<RationalVector>& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].empty()) return false;
    if (i > 0 && x[i - 1].support().max() >= x[i].support().min()) return false;
  }
  return true;
}

std::string mask_string(std::uint64_t mask, std::size_t n) {
  std::string s = "{";
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1) s += (s.size() > 1 ? "," : "") + std::to_string(i + 1);
  return s + "}";
}

}  // namespace

InterlaceResult interlace_check(const FinSet& l, const FinSet& m, const RationalVector& a, Ordinal xi) {
  if (l.size() != m.size()) throw HypothesisNotSatisfied("L and M prefixes differ in length");
  for (std::size_t i = 0; i < l.size(); ++i) {
    bool ok = l[i] < m[i] && (i + 1 == l.size() || m[i] < l[i + 1]);
    if (!ok) throw HypothesisNotSatisfied("l_i < m_i < l_{i+1} fails at i = " + std::to_string(i + 1));
  }
  InterlaceResult r;
  r.norm_l = norm_value(place_on(l, a), xi);
  r.norm_m = norm_value(place_on(m, a), xi);
  r.pass = r.norm_l <= r.norm_m && r.norm_m <= 2 * r.norm_l;
  return r;
}

AveragesEquivalence averages_equivalence_check(const FinSet& l_prefix, Ordinal zeta, Ordinal xi,
                                               const RationalVector& a) {
  if (zeta > xi) throw std::invalid_argument("need zeta <= xi");
  AveragesEquivalence r;
  const Ordinal lower{xi.value - zeta.value};
  r.constant = 12 * (zeta.value + 1);
  if (a.empty()) {
    r.lower = r.upper = r.intermediate = true;
    return r;
  }
  const auto count = static_cast<std::size_t>(a.support().max());
  auto blocks = repeated_averages(l_prefix, zeta, count);
  RationalVector sum;
  std::vector<Element> mins, maxs;
  for (const auto& b : blocks) {
    mins.push_back(b.support.min());
    maxs.push_back(b.support.max());
  }
  for (const auto& [i, v] : a.entries()) sum += v * blocks[static_cast<std::size_t>(i - 1)].vector;
  r.averages_norm = norm_value(sum, xi);
  r.markers_norm = norm_value(place_on(FinSet(mins), a), lower);
  r.maxima_norm = norm_value(place_on(FinSet(maxs), a), lower);
  r.lower = r.markers_norm <= r.averages_norm;
  r.upper = r.averages_norm <= r.constant * r.markers_norm;
  r.intermediate = r.averages_norm <= Rational(6 * (zeta.value + 1)) * r.maxima_norm;
  return r;
}

namespace {

struct HypothesisPeak {
  Rational value = 0;
  std::uint64_t i_mask = 0, j_mask = 0;
};

// Best |sum of a subset| of signed terms, with the subset that attains it.
std::pair<Rational, std::uint64_t> best_signed_subset(const std::vector<std::pair<std::size_t, Rational>>& terms) {
  Rational pos = 0, neg = 0;
  std::uint64_t pm = 0, nm = 0;
  for (const auto& [idx, t] : terms) {
    if (t > 0) {
      pos += t;
      pm |= std::uint64_t{1} << idx;
    } else if (t < 0) {
      neg -= t;
      nm |= std::uint64_t{1} << idx;
    }
  }
  return pos >= neg ? std::pair{pos, pm} : std::pair{neg, nm};
}

HypothesisPeak hypothesis_peak(const std::vector<RationalVector>& x, const std::vector<FinSet>& g,
                               const std::vector<Rational>& a) {
  const std::size_t p = x.size(), q = g.size();
  if (a.size() != p) throw std::invalid_argument("need one coefficient per block");
  if (p > 20 || q > 20) throw BudgetExceeded("combination hypothesis is enumerated for at most 20 blocks and 20 sets");
  // c[i][j] = a_i x_i(G_j); hits[i] = sets met by block i.
  std::vector<std::vector<Rational>> c(p, std::vector<Rational>(q));
  std::vector<std::uint64_t> hits_of_block(p, 0), hits_of_set(q, 0);
  for (std::size_t i = 0; i < p; ++i) {
    FinSet supp = x[i].support();
    for (std::size_t j = 0; j < q; ++j) {
      bool meets = false;
      for (Element e : g[j])
        if (supp.contains(e)) {
          meets = true;
          c[i][j] += x[i].at(e);
        }
      c[i][j] *= a[i];
      if (meets) {
        hits_of_block[i] |= std::uint64_t{1} << j;
        hits_of_set[j] |= std::uint64_t{1} << i;
      }
    }
  }
  HypothesisPeak best;
  std::vector<std::pair<std::size_t, Rational>> terms;
  for (std::uint64_t jm = 0; jm < (std::uint64_t{1} << q); ++jm) {
    terms.clear();
    for (std::size_t i = 0; i < p; ++i) {
      std::uint64_t met = hits_of_block[i] & jm;
      if (met != 0 && (met & (met - 1)) == 0) terms.emplace_back(i, c[i][static_cast<std::size_t>(__builtin_ctzll(met))]);
    }
    auto [v, im] = best_signed_subset(terms);
    if (v > best.value) best = {v, im, jm};
  }
  for (std::uint64_t im = 0; im < (std::uint64_t{1} << p); ++im) {
    terms.clear();
    for (std::size_t j = 0; j < q; ++j) {
      std::uint64_t met = hits_of_set[j] & im;
      if (met != 0 && (met & (met - 1)) == 0) terms.emplace_back(j, c[static_cast<std::size_t>(__builtin_ctzll(met))][j]);
    }
    auto [v, jm] = best_signed_subset(terms);
    if (v > best.value) best = {v, im, jm};
  }
  return best;
}

}  // namespace

Rational combination_hypothesis_constant(const std::vector<RationalVector>& x,
                                         const std::vector<FinSet>& g, const std::vector<Rational>& a) {
  return hypothesis_peak(x, g, a).value;
}

CombinationResult combination_bound_check(const std::vector<RationalVector>& x,
                                          const std::vector<FinSet>& g, const std::vector<Rational>& a,
                                          const Rational& c) {
  if (!successive(x)) throw HypothesisNotSatisfied("blocks are not successive and nonzero");
  for (std::size_t j = 1; j < g.size(); ++j)
    if (!g[j - 1].empty() && !g[j].empty() && g[j - 1].max() >= g[j].min())
      throw HypothesisNotSatisfied("sets G_j are not successive");
  HypothesisPeak peak = hypothesis_peak(x, g, a);
  if (peak.value > c)
    throw HypothesisNotSatisfied("pair I=" + mask_string(peak.i_mask, x.size()) +
                                 " J=" + mask_string(peak.j_mask, g.size()) + " reaches " +
                                 to_string(peak.value) + " > C = " + to_string(c));
  RationalVector sum;
  for (std::size_t i = 0; i < x.size(); ++i) sum += a[i] * x[i];
  FinSet all;
  for (const auto& s : g) all = all.united(s);
  CombinationResult r;
  r.c = c;
  r.observed = ::abs(evaluate(sum, all).first);
  r.pass = r.observed <= 3 * c;
  return r;
}

DecayResult decay_bound_check(const std::vector<RationalVector>& x, Ordinal zeta, Ordinal xi,
                              const Rational& b, const std::vector<Rational>& a, const FinSet& h) {
  if (zeta.value < 1 || zeta > xi) throw HypothesisNotSatisfied("need 1 <= zeta <= xi");
  if (a.size() != x.size()) throw std::invalid_argument("need one coefficient per block");
  if (!successive(x)) throw HypothesisNotSatisfied("blocks are not successive and nonzero");
  if (!is_member(h, zeta)) throw HypothesisNotSatisfied(h.to_string() + " is not in S_" + std::to_string(zeta.value));
  for (std::size_t n = 0; n < x.size(); ++n) {
    if (norm_value(x[n], xi) >= b)
      throw HypothesisNotSatisfied("||x_" + std::to_string(n + 1) + "||_xi >= b");
    if (n > 0 && norm_value(x[n], Ordinal{zeta.value - 1}) >= power_of_two_inverse(x[n - 1].support().max()))
      throw HypothesisNotSatisfied("x_" + std::to_string(n + 1) + " does not decay fast enough");
  }
  RationalVector sum;
  Rational amax = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += a[i] * x[i];
    amax = std::max<Rational>(amax, ::abs(a[i]));
  }
  DecayResult r;
  r.observed = ::abs(evaluate(sum, h).first);
  r.bound = (2 + b) * amax;
  r.pass = r.observed <= r.bound;
  return r;
}

BlockSubsequenceWitness block_subsequence_witness(const std::vector<RationalVector>& x, Ordinal xi,
                                                  const Rational& delta, const Rational& b) {
  if (delta <= 0 || b <= 0) throw HypothesisNotSatisfied("need delta > 0 and b > 0");
  if (!successive(x)) throw HypothesisNotSatisfied("blocks are not successive and nonzero");
  for (std::size_t n = 0; n < x.size(); ++n)
    if (norm_value(x[n], xi) >= b)
      throw HypothesisNotSatisfied("||x_" + std::to_string(n + 1) + "||_xi >= b");

  BlockSubsequenceWitness w;
  bool found = false;
  for (unsigned alpha = 0; alpha <= xi.value && !found; ++alpha) {
    found = std::all_of(x.begin(), x.end(), [&](const RationalVector& v) {
      return norm_value(v, Ordinal{alpha}) > delta;
    });
    if (found) w.zeta = alpha;
  }
  if (!found) throw HypothesisNotSatisfied("no level up to xi has all block norms above delta");
  w.lower_constant = 1 / delta;

  if (w.zeta == 0) {
    w.upper_constant = 4 * b;
    for (std::size_t n = 0; n < x.size(); ++n) {
      w.indices.push_back(n);
      w.markers.push_back(norm(x[n], Ordinal{0}).witness.min());
    }
    return w;
  }
  w.upper_constant = 12 * (2 + b);
  for (std::size_t n = 0; n < x.size(); ++n) {
    if (!w.indices.empty()) {
      Element k = x[w.indices.back()].support().max();
      if (norm_value(x[n], Ordinal{w.zeta - 1}) >= power_of_two_inverse(k)) continue;
    }
    w.indices.push_back(n);
    w.markers.push_back(norm(x[n], Ordinal{w.zeta}).witness.min());
  }
  return w;
}

EquivalenceResult block_subsequence_check(const BlockSubsequenceWitness& w,
                                          const std::vector<RationalVector>& x, Ordinal xi,
                                          const RationalVector& a) {
  RationalVector blocks;
  for (const auto& [i, v] : a.entries()) {
    if (i < 1 || static_cast<std::size_t>(i) > w.indices.size())
      throw std::invalid_argument("coefficient index outside the chosen subsequence");
    blocks += v * x[w.indices[static_cast<std::size_t>(i - 1)]];
  }
  EquivalenceResult r;
  r.blocks_norm = norm_value(blocks, xi);
  r.markers_norm = norm_value(place_on(FinSet(w.markers), a), Ordinal{xi.value - w.zeta});
  r.pass = r.markers_norm <= w.lower_constant * r.blocks_norm &&
           r.blocks_norm <= w.upper_constant * r.markers_norm;
  return r;
}

std::optional<Element> interval_block_end(Element p, Ordinal xi, Element limit) {
  if (xi.value == 0) return p > limit ? std::nullopt : std::optional<Element>(p + 1);
  if (xi.value == 1) return 2 * p - 1 > limit ? std::nullopt : std::optional<Element>(2 * p);
  Element pos = p;
  for (Element c = 0; c < p; ++c) {
    auto next = interval_block_end(pos, Ordinal{xi.value - 1}, limit);
    if (!next) return std::nullopt;
    pos = *next;
  }
  return pos;
}

ComplementedBasis build_complemented_basis(Ordinal xi, std::size_t count, std::uint64_t element_cap) {
  if (xi.value < 1) throw std::invalid_argument("the complemented basis needs xi >= 1");
  const Ordinal lower{xi.value - 1};
  ComplementedBasis basis{xi, {}, {}};
  Element prev_max = 0;
  for (std::size_t n = 1; n <= count; ++n) {
    const auto nn = static_cast<Element>(n);
    Element threshold = prev_max;
    for (Element k = 1; k < nn; ++k) threshold = std::max(threshold, k * (nn + k) * (nn + k));
    const Element start = threshold + 1;
    const Element limit = start + static_cast<Element>(element_cap) - 1;
    Element pos = start;
    for (Element i = 0; i < nn * nn; ++i) {
      auto next = interval_block_end(pos, lower, limit);
      if (!next)
        throw BudgetExceeded("F_" + std::to_string(n) + " would exceed " + std::to_string(element_cap) +
                             " elements");
      pos = *next;
    }
    FinSet f = FinSet::interval(start, pos - 1);
    std::vector<RationalVector::Entry> entries;
    entries.reserve(f.size());
    const Rational share(1, nn * nn);
    for (std::size_t at = 0; at < f.size();) {
      auto [avg, end] = block_average(f.view(), at, lower);
      for (const auto& [idx, v] : avg.entries()) entries.emplace_back(idx, v * share);
      at = end;
    }
    basis.u.push_back(RationalVector::from_entries(std::move(entries)));
    basis.f.push_back(std::move(f));
    prev_max = pos - 1;
  }
  return basis;
}

RationalVector project_onto_basis(const RationalVector& x, const ComplementedBasis& basis) {
  RationalVector out;
  const auto& e = x.entries();
  for (std::size_t i = 0; i < basis.f.size(); ++i) {
    const Element lo = basis.f[i].min(), hi = basis.f[i].max();
    auto it = std::lower_bound(e.begin(), e.end(), lo,
                               [](const RationalVector::Entry& en, Element v) { return en.first < v; });
    Rational mass = 0;
    for (; it != e.end() && it->first <= hi; ++it) mass += it->second;
    if (mass != 0) out += mass * basis.u[i];
  }
  return out;
}

std::vector<BasisReport> basis_invariants(const ComplementedBasis& basis) {
  std::vector<BasisReport> out;
  const unsigned xi = basis.xi.value;
  auto add = [&](std::string claim, std::size_t n, Rational bound, Rational observed, bool pass) {
    out.push_back({std::move(claim), n, std::move(bound), std::move(observed), pass});
  };
  Rational partial = 0, partial_bound = 0;
  for (std::size_t i = 0; i < basis.f.size(); ++i) {
    const std::size_t n = i + 1;
    const auto nn = static_cast<Element>(n);
    const FinSet& f = basis.f[i];
    const RationalVector& u = basis.u[i];
    add("F_n is an integer interval", n, Rational(static_cast<long>(f.max() - f.min() + 1)),
        Rational(static_cast<long>(f.size())), f == FinSet::interval(f.min(), f.max()));
    add("supp u_n = F_n", n, 1, u.support() == f ? 1 : 0, u.support() == f);
    add("tau_{xi-1}(F_n) = n^2", n, Rational(nn * nn),
        Rational(static_cast<long>(tau(f, Ordinal{xi - 1}))),
        tau(f, Ordinal{xi - 1}) == static_cast<std::size_t>(nn * nn));
    Element need = 0;
    for (Element k = 1; k < nn; ++k) need = std::max(need, k * (nn + k) * (nn + k));
    add("min F_n > max k(n+k)^2 over k < n", n, Rational(static_cast<long>(need)),
        Rational(static_cast<long>(f.min())), f.min() > need);
    if (i > 0)
      add("min F_n > max F_{n-1}", n, Rational(static_cast<long>(basis.f[i - 1].max())),
          Rational(static_cast<long>(f.min())), f.min() > basis.f[i - 1].max());
    bool positive = std::all_of(u.entries().begin(), u.entries().end(),
                                [](const RationalVector::Entry& e) { return e.second > 0; });
    add("u_n convex", n, 1, positive ? u.total() : Rational(0), positive && u.total() == 1);
    // F_n in S_xi and |u_n|(F_n) = 1 = l1 norm pin the norm at exactly 1.
    const bool admissible = is_member(f, basis.xi);
    add("||u_n||_xi = 1", n, 1, admissible ? u.l1() : Rational(0), admissible && u.l1() == 1);
    Rational lower_norm = norm_value(u, Ordinal{xi - 1});
    Rational bound(static_cast<long>(xi), nn * nn);
    add("||u_n||_{xi-1} <= xi/n^2", n, bound, lower_norm, lower_norm <= bound);
    partial += lower_norm;
    partial_bound += bound;
    add("sum_{m<=n} ||u_m||_{xi-1} <= xi sum 1/m^2", n, partial_bound, partial, partial <= partial_bound);
  }
  return out;
}

std::optional<std::size_t> l1_start_index(const ComplementedBasis& basis, std::size_t k) {
  for (std::size_t n = 1; n + k <= basis.f.size(); ++n) {
    const auto m = static_cast<Element>(n + k);
    if (basis.f[n - 1].min() > static_cast<Element>(k) * m * m) return n;
  }
  return std::nullopt;
}

bool l1_block_certificate(const ComplementedBasis& basis, std::size_t n, std::size_t k) {
  if (n + k > basis.f.size()) throw std::out_of_range("not enough blocks built");
  std::vector<Element> all;
  for (std::size_t i = n; i < n + k; ++i) all.insert(all.end(), basis.f[i].begin(), basis.f[i].end());
  return is_member(all, basis.xi);
}

UncomplementedExample build_uncomplemented(Ordinal xi, std::size_t count, Element head,
                                           std::uint64_t element_cap) {
  if (xi.value < 1) throw std::invalid_argument("the example needs xi >= 1");
  if (head < 2) throw std::invalid_argument("M must start at 2 or later so no block is a singleton");
  const Element limit = head + static_cast<Element>(element_cap) - 1;
  Element pos = head;
  for (std::size_t n = 1; n <= count; ++n) {
    auto next = interval_block_end(pos, xi, limit);
    if (!next)
      throw BudgetExceeded("block " + std::to_string(n) + " of M would exceed " +
                           std::to_string(element_cap) + " elements");
    pos = *next;
  }
  UncomplementedExample ex;
  ex.xi = xi;
  ex.m_prefix = FinSet::interval(head, pos - 1);
  for (auto& blk : repeated_averages(ex.m_prefix, xi, count)) {
    const std::size_t n = blk.n;
    unsigned lg = 0;
    while ((std::uint64_t{1} << lg) < n + 1) ++lg;
    Rational an(1, lg);
    const Element qn = blk.support.min();
    const Rational top = blk.vector.at(qn);
    RationalVector rest = blk.vector;
    rest.set(qn, 0);
    RationalVector vn = RationalVector::unit(qn);
    vn *= an;
    RationalVector wn = ((1 - an) / (1 - top)) * rest;
    ex.q.push_back(qn);
    ex.a.push_back(an);
    ex.u.push_back(vn + wn);
    ex.v.push_back(std::move(vn));
    ex.w.push_back(std::move(wn));
  }
  return ex;
}

}  // namespace schreier
