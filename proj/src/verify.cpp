#include "schreier/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "schreier/averages.hpp"
#include "schreier/constructions.hpp"
#include "schreier/domination.hpp"
#include "schreier/errors.hpp"
#include "schreier/norm.hpp"

namespace schreier {

std::string_view relation_symbol(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::lt: return "<";
    case Relation::eq: return "==";
    case Relation::ge: return ">=";
    case Relation::gt: return ">";
  }
  return "?";
}

std::uint64_t SuiteReport::checks() const {
  std::uint64_t n = 0;
  for (const auto& c : claims) n += c.instances;
  return n;
}

std::uint64_t SuiteReport::violations() const {
  std::uint64_t n = 0;
  for (const auto& c : claims) n += c.violations;
  return n;
}

bool splits_through_level(const FinSet& g, Ordinal xi, Ordinal zeta, bool maximal) {
  if (zeta > xi) throw std::invalid_argument("need zeta <= xi");
  if (g.empty()) return false;
  const unsigned top = xi.value - zeta.value;
  auto seq = g.view();
  const std::size_t n = seq.size();
  // ends[s]: admissible piece ends for a piece starting at s.
  std::vector<std::vector<std::size_t>> ends(n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t e = s + 1; e <= n; ++e) {
      auto piece = seq.subspan(s, e - s);
      if (!is_member(piece, zeta)) break;
      if (!maximal || is_maximal(FinSet(std::vector<Element>(piece.begin(), piece.end())), zeta))
        ends[s].push_back(e);
    }
  // The minima are fed to the streaming test for S_top; a state is the
  // position reached plus the counters, which fix everything downstream.
  std::set<std::pair<std::size_t, std::vector<std::uint32_t>>> seen;
  std::function<bool(std::size_t, const std::vector<std::uint32_t>&, bool)> walk =
      [&](std::size_t pos, const std::vector<std::uint32_t>& slots, bool started) {
        if (pos == n)
          return !maximal || std::all_of(slots.begin(), slots.end(), [](auto c) { return c == 0; });
        for (std::size_t e : ends[pos]) {
          auto next = slots;
          if (greedy_push(next.data(), top, seq[pos], started) && started) continue;
          if (seen.insert({e, next}).second && walk(e, next, true)) return true;
        }
        return false;
      };
  return walk(0, std::vector<std::uint32_t>(top, 0), false);
}

namespace {

// -- Plumbing ---------------------------------------------------------------

constexpr std::uint64_t kChunk = 256;

std::uint64_t name_tag(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t tag, std::uint64_t trial) {
  auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
  auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  std::seed_seq seq{lo(seed), hi(seed), lo(tag), hi(tag), lo(trial), hi(trial)};
  return std::mt19937_64(seq);
}

bool holds(const Rational& observed, Relation r, const Rational& bound) {
  switch (r) {
    case Relation::le: return observed <= bound;
    case Relation::lt: return observed < bound;
    case Relation::eq: return observed == bound;
    case Relation::ge: return observed >= bound;
    case Relation::gt: return observed > bound;
  }
  return false;
}

struct Lines {
  std::uint64_t trial = 0;
  std::vector<CheckLine> out;

  void add(std::string claim, Relation r, Rational observed, Rational bound) {
    bool pass = holds(observed, r, bound);
    out.push_back({std::move(claim), trial, r, std::move(observed), std::move(bound), pass});
  }
  void truth(std::string claim, bool ok) { add(std::move(claim), Relation::eq, ok ? 1 : 0, 1); }
};

struct Runner {
  SuiteReport& report;
  const SuiteOptions& options;
  std::map<std::string, std::size_t, std::less<>> index;

  void absorb(CheckLine line) {
    auto it = index.find(line.claim);
    if (it == index.end()) {
      it = index.emplace(line.claim, report.claims.size()).first;
      report.claims.push_back({line.claim, line.relation, 0, 0, std::nullopt});
    }
    ClaimSummary& c = report.claims[it->second];
    ++c.instances;
    if (!line.pass) ++c.violations;
    if ((line.relation == Relation::le || line.relation == Relation::lt) && line.bound > 0) {
      Rational ratio = line.observed / line.bound;
      if (!c.worst_ratio || ratio > *c.worst_ratio) c.worst_ratio = ratio;
    }
    if (options.keep_all_lines || !line.pass) report.lines.push_back(std::move(line));
  }

  // Runs body on trials [report.trials, report.trials + count) in parallel;
  // lines are absorbed in trial order.
  void trials(std::uint64_t count, const std::function<void(std::mt19937_64&, Lines&)>& body) {
    const std::uint64_t tag = name_tag(report.suite);
    const std::uint64_t first = report.trials;
    for (std::uint64_t base = 0; base < count; base += kChunk) {
      const auto n = static_cast<std::int64_t>(std::min(kChunk, count - base));
      std::vector<Lines> chunk(static_cast<std::size_t>(n));
      std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t i = 0; i < n; ++i) {
        auto& lines = chunk[static_cast<std::size_t>(i)];
        try {
          lines.trial = first + base + static_cast<std::uint64_t>(i);
          auto rng = trial_rng(options.seed, tag, lines.trial);
          body(rng, lines);
        } catch (...) {
          errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
      }
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
      for (auto& lines : chunk)
        for (auto& line : lines.out) absorb(std::move(line));
    }
    report.trials += count;
  }

  std::uint64_t count_or(std::uint64_t fallback) const { return options.trials.value_or(fallback); }

  unsigned level(const Lines& l, unsigned lo, unsigned hi) const {
    return options.xi ? *options.xi : lo + static_cast<unsigned>(l.trial % (hi - lo + 1));
  }
  void require_level(unsigned lo, unsigned hi) const {
    if (options.xi && (*options.xi < lo || *options.xi > hi))
      throw std::invalid_argument("suite " + report.suite + " covers xi in [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "]");
  }
};

// -- Random instances -------------------------------------------------------

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Rational rational(std::mt19937_64& rng, long max_num, long max_den, bool nonzero = true) {
  long n = 0;
  do n = static_cast<long>(uniform(rng, -max_num, max_num));
  while (nonzero && n == 0);
  Rational q(n, static_cast<long>(uniform(rng, 1, max_den)));
  q.canonicalize();
  return q;
}

// k distinct elements of [lo, hi], sorted.
std::vector<Element> sized_subset(std::mt19937_64& rng, Element lo, Element hi, std::size_t k) {
  std::vector<Element> pool;
  for (Element e = lo; e <= hi; ++e) pool.push_back(e);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min(k, pool.size()));
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<Element> thinned(std::mt19937_64& rng, Element start, Element limit, double keep) {
  std::vector<Element> v{start};
  for (Element e = start + 1; e <= limit; ++e)
    if (coin(rng, keep)) v.push_back(e);
  return v;
}

RationalVector random_vector(std::mt19937_64& rng, std::size_t max_support, Element max_index,
                             long max_num = 9, long max_den = 6, bool nonneg = false) {
  std::vector<RationalVector::Entry> e;
  for (auto n = uniform(rng, 0, static_cast<std::int64_t>(max_support)); n > 0; --n) {
    Rational q = rational(rng, max_num, max_den, false);
    e.emplace_back(uniform(rng, 1, max_index), nonneg ? Rational(::abs(q)) : q);
  }
  return RationalVector::from_entries(std::move(e));
}

// Coefficients on 1..n, each present with probability `density`, never all zero.
RationalVector coefficients(std::mt19937_64& rng, std::size_t n, double density = 0.8) {
  RationalVector a;
  for (std::size_t i = 1; i <= n; ++i)
    if (coin(rng, density)) a.set(static_cast<Element>(i), rational(rng, 9, 5));
  if (a.empty() && n > 0) a.set(static_cast<Element>(uniform(rng, 1, static_cast<std::int64_t>(n))), 1);
  return a;
}

Rational count(std::size_t n) { return Rational(static_cast<unsigned long>(n)); }

// -- Suites -----------------------------------------------------------------

void suite_norm_oracle(Runner& run) {
  run.require_level(0, 2);
  run.trials(run.count_or(1200), [&](std::mt19937_64& rng, Lines& l) {
    const Ordinal xi{run.level(l, 0, 2)};
    auto x = random_vector(rng, 12, 30);
    auto fast = norm(x, xi);
    auto exhaustive = norm_bruteforce(x, xi, run.options.budget);
    l.add("norm == exhaustive maximum", Relation::eq, fast.value, exhaustive.value);
    l.add("norm_serial == norm", Relation::eq, norm_serial(x, xi).value, fast.value);
    Rational attained = is_member(fast.witness, xi) ? evaluate(x, fast.witness).second : Rational(-1);
    l.add("witness in S_xi attains the norm", Relation::eq, attained, fast.value);
  });
}

void suite_first_blocks(Runner& run) {
  run.require_level(0, 3);
  run.trials(run.count_or(500), [&](std::mt19937_64& rng, Lines& l) {
    const unsigned xi = run.level(l, 0, 3);
    // Level 3 blocks from 2 on need nearly full density to stay desk-sized.
    const double lo_keep = xi == 3 ? 0.95 : 0.6;
    const Element limit = xi <= 1 ? 400 : xi == 2 ? 4000 : 200000;
    for (int attempt = 0; attempt < 1000; ++attempt) {
      const Element start = uniform(rng, 1, xi == 3 ? 2 : 3);
      auto m = thinned(rng, start, limit, std::uniform_real_distribution<double>(std::max(lo_keep, 0.75), 1.0)(rng));
      const double keep = std::uniform_real_distribution<double>(lo_keep, 1.0)(rng);
      std::vector<Element> sub;
      const bool keep_first = xi == 3 || coin(rng, 0.5);
      for (std::size_t i = 0; i < m.size(); ++i)
        if ((i == 0 && keep_first) || coin(rng, keep)) sub.push_back(m[i]);
      auto em = maximal_block_end(m, 0, Ordinal{xi});
      auto el = maximal_block_end(sub, 0, Ordinal{xi});
      if (!em || !el) continue;
      l.add("max F_1(M) <= max F_1(L) for L subset of M", Relation::le, Rational(m[*em - 1]),
            Rational(sub[*el - 1]));
      return;
    }
    throw std::logic_error("no instance with determined first blocks");
  });
}

void suite_average_sums(Runner& run) {
  run.require_level(1, 3);
  run.trials(run.count_or(run.options.xi ? 50 : 150), [&](std::mt19937_64& rng, Lines& l) {
    const unsigned xi = run.level(l, 1, 3);
    for (;;) {
      std::vector<Element> m;
      if (xi == 1) m = thinned(rng, uniform(rng, 2, 8), 3000, std::uniform_real_distribution<double>(0.5, 1.0)(rng));
      if (xi == 2) m = thinned(rng, uniform(rng, 2, 4), 6000, std::uniform_real_distribution<double>(0.7, 1.0)(rng));
      if (xi == 3) m = thinned(rng, uniform(rng, 1, 2), 4000, coin(rng, 0.5) ? 1.0 : 0.97);
      FinSet prefix(m);
      const std::size_t blocks = complete_blocks(prefix, Ordinal{xi});
      if (blocks == 0) continue;
      RationalVector sum;
      for (const auto& b : repeated_averages(prefix, Ordinal{xi}, blocks)) {
        sum += b.vector;
        l.add("||sum_{i<=n} xi_i^M||_xi <= xi + 1", Relation::le, norm_value(sum, Ordinal{xi}),
              Rational(xi + 1));
      }
      return;
    }
  });
}

std::vector<Element> nonempty_subset_of(std::mt19937_64& rng, const std::vector<Element>& b) {
  std::vector<Element> a;
  for (Element e : b)
    if (coin(rng, 0.5)) a.push_back(e);
  if (a.empty()) a.push_back(b[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(b.size()) - 1))]);
  return a;
}

std::optional<FinSet> random_maximal(std::mt19937_64& rng, Element start, Ordinal xi, double keep) {
  std::vector<Element> seq{start};
  for (Element reach = start + 64; reach <= start + 300000; reach *= 4) {
    for (Element e = seq.back() + 1; e <= reach; ++e)
      if (coin(rng, keep)) seq.push_back(e);
    if (auto end = maximal_block_end(seq, 0, xi)) {
      seq.resize(*end);
      return FinSet(std::move(seq));
    }
  }
  return std::nullopt;
}

void suite_tau(Runner& run) {
  run.require_level(0, 3);
  run.trials(run.count_or(500), [&](std::mt19937_64& rng, Lines& l) {
    const Ordinal xi{run.level(l, 0, 3)};
    auto t = [&](const std::vector<Element>& s, Ordinal z) { return count(tau(FinSet(s), z)); };
    auto random_set = [&](Element lo, Element hi) {
      return sized_subset(rng, lo, hi, static_cast<std::size_t>(uniform(rng, 1, 14)));
    };

    // 1. monotone under inclusion
    auto b1 = random_set(1, 40);
    auto a1 = nonempty_subset_of(rng, b1);
    l.add("part 1: tau(A) <= tau(B) for A subset of B", Relation::le, t(a1, xi), t(b1, xi));

    // 2. subadditive on successive sets
    const Element cut = uniform(rng, 1, 39);
    auto a2 = random_set(1, cut), b2 = random_set(cut + 1, 40);
    std::vector<Element> u2 = a2;
    u2.insert(u2.end(), b2.begin(), b2.end());
    l.add("part 2: tau(A u B) <= tau(A) + tau(B) for A < B", Relation::le, t(u2, xi), t(a2, xi) + t(b2, xi));

    // 3. spreading lowers tau
    for (;;) {
      auto a3 = random_set(1, 40);
      std::vector<Element> b3;
      Element shift = 0;
      for (Element e : a3) {
        shift += uniform(rng, 0, 2);
        b3.push_back(e + shift);
      }
      if (b3.back() > 40) continue;
      l.add("part 3: tau(B) <= tau(A) when a_i <= b_i", Relation::le, t(b3, xi), t(a3, xi));
      break;
    }

    // 4. maximal blocks with later minima, one level up. Maximal S_3 sets
    // beyond the first few integers are far too large, so this part runs at
    // min(xi, 2).
    const Ordinal z{std::min(xi.value, 2u)};
    const std::int64_t most = z.value == 2 ? 2 : z.value == 1 ? 4 : 6;
    for (int attempt = 0;; ++attempt) {
      if (attempt == 1000) throw std::logic_error("no part-4 instance found");
      const double keep = std::uniform_real_distribution<double>(0.8, 1.0)(rng);
      const auto n = static_cast<std::size_t>(uniform(rng, 1, most));
      std::vector<Element> a4, b4;
      bool ok = true;
      Element a_next = uniform(rng, 1, 3), b_floor = 1;
      for (std::size_t i = 0; i < n && ok; ++i) {
        auto ai = random_maximal(rng, a_next, z, keep);
        if (!ai) {
          ok = false;
          break;
        }
        const Element b_start = std::max(ai->min(), b_floor) + uniform(rng, 0, 2);
        auto bi = b_start <= 12 || z.value < 2 ? random_maximal(rng, b_start, z, keep) : std::nullopt;
        if (!bi) {
          ok = false;
          break;
        }
        a4.insert(a4.end(), ai->begin(), ai->end());
        b4.insert(b4.end(), bi->begin(), bi->end());
        a_next = ai->max() + 1 + uniform(rng, 0, 2);
        b_floor = bi->max() + 1;
        if (z.value == 2 && a_next > 12) break;
      }
      if (!ok) continue;
      const Ordinal up{z.value + 1};
      l.add("part 4: tau_{xi+1}(B) <= tau_{xi+1}(A) for maximal blocks with min A_i <= min B_i",
            Relation::le, t(b4, up), t(a4, up));
      break;
    }

    // 5. arbitrary covers
    auto a5 = random_set(1, 40);
    const auto n5 = static_cast<std::size_t>(uniform(rng, 1, std::min<std::int64_t>(4, static_cast<std::int64_t>(a5.size()))));
    std::vector<std::vector<Element>> parts(n5);
    auto order = a5;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < order.size(); ++i) {
      std::size_t home = i < n5 ? i : static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n5) - 1));
      parts[home].push_back(order[i]);
      for (std::size_t j = 0; j < n5; ++j)
        if (j != home && coin(rng, 0.2)) parts[j].push_back(order[i]);
    }
    Rational sum = 0;
    for (auto& p : parts) {
      std::sort(p.begin(), p.end());
      sum += t(p, xi);
    }
    l.add("part 5: tau(A) <= (sum tau(A_i))(xi+1) + 1", Relation::le, t(a5, xi), sum * (xi.value + 1) + 1);
  });
}

void suite_decomposition(Runner& run) {
  run.require_level(0, 3);
  const unsigned lo = run.options.xi.value_or(0), hi = run.options.xi.value_or(3);
  constexpr Element kTop = 14;
  run.trials((std::uint64_t{1} << kTop) - 1, [&](std::mt19937_64&, Lines& l) {
    std::vector<Element> v;
    const std::uint64_t mask = l.trial + 1;
    for (Element e = 1; e <= kTop; ++e)
      if (mask >> (e - 1) & 1) v.push_back(e);
    FinSet g(v);
    for (unsigned xi = lo; xi <= hi; ++xi) {
      const bool member = is_member(g, Ordinal{xi});
      const bool maximal = member && is_maximal(g, Ordinal{xi});
      for (unsigned zeta = 0; zeta <= xi; ++zeta) {
        l.truth("member of S_xi <=> splits through S_zeta with minima in S_{xi-zeta}",
                member == splits_through_level(g, Ordinal{xi}, Ordinal{zeta}, false));
        l.truth("maximal in S_xi <=> maximal pieces with maximal minima",
                maximal == splits_through_level(g, Ordinal{xi}, Ordinal{zeta}, true));
      }
    }
  });
}

void suite_domination(Runner& run) {
  run.require_level(0, 2);
  run.trials(run.count_or(100), [&](std::mt19937_64& rng, Lines& l) {
    const Ordinal xi{run.level(l, 0, 2)};
    const auto n = static_cast<std::size_t>(uniform(rng, 2, 25));
    auto lv = sized_subset(rng, 1, 50, n);
    std::vector<Element> mv;
    switch (uniform(rng, 0, 2)) {
      case 0: mv = sized_subset(rng, 1, 80, n); break;
      case 1: {
        const Element s = uniform(rng, 1, 30);
        for (Element e : lv) mv.push_back(e + s);
        break;
      }
      default: {
        const Element c = uniform(rng, 2, 3);
        for (Element e : lv) mv.push_back(c * e);
      }
    }
    SubseqPair pair{FinSet(lv), FinSet(mv)};
    auto d = d_truncated(pair, xi, DMode::exhaustive, run.options.budget);
    for (int r = 0; r < 3; ++r) {
      auto a = coefficients(rng, n, 0.6);
      l.add("||sum a e_m||_xi <= d ||sum a e_l||_xi", Relation::le, norm_value(pair.on_m(a), xi),
            count(d.value) * norm_value(pair.on_l(a), xi));
    }
    if (d.value >= 2) {
      auto w = ratio_witness(pair, xi, d.value, run.options.budget);
      l.add("witness ratio ||x_m|| / ||x_l|| >= (d-1)/(xi+1)", Relation::ge, w.norm_m / w.norm_l,
            Rational(static_cast<long>(d.value - 1), static_cast<long>(xi.value + 1)));
    }
  });
}

void suite_interlace(Runner& run) {
  run.require_level(0, 2);
  run.trials(run.count_or(200), [&](std::mt19937_64& rng, Lines& l) {
    const Ordinal xi{run.level(l, 0, 2)};
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 12));
    auto pool = sized_subset(rng, 1, 60, 2 * n);
    std::vector<Element> lv, mv;
    for (std::size_t i = 0; i < n; ++i) {
      lv.push_back(pool[2 * i]);
      mv.push_back(pool[2 * i + 1]);
    }
    auto r = interlace_check(FinSet(lv), FinSet(mv), coefficients(rng, n), xi);
    l.add("||sum a e_l||_xi <= ||sum a e_m||_xi", Relation::le, r.norm_l, r.norm_m);
    l.add("||sum a e_m||_xi <= 2 ||sum a e_l||_xi", Relation::le, r.norm_m, 2 * r.norm_l);
  });
}

void suite_averages(Runner& run) {
  run.require_level(1, 3);
  static const std::pair<unsigned, unsigned> kLevels[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  run.trials(run.count_or(120), [&](std::mt19937_64& rng, Lines& l) {
    unsigned zeta = 0, xi = 0;
    if (run.options.xi) {
      xi = *run.options.xi;
      zeta = static_cast<unsigned>(l.trial % xi);
    } else {
      std::tie(zeta, xi) = kLevels[l.trial % 6];
    }
    std::vector<Element> lv;
    if (zeta == 0) lv = sized_subset(rng, 1, 60, static_cast<std::size_t>(uniform(rng, 1, 10)));
    if (zeta == 1) lv = thinned(rng, uniform(rng, 1, 5), 600, std::uniform_real_distribution<double>(0.6, 1.0)(rng));
    if (zeta == 2) lv = thinned(rng, uniform(rng, 1, 2), 2047, 1.0);
    FinSet prefix(lv);
    const std::size_t blocks = std::min<std::size_t>(complete_blocks(prefix, Ordinal{zeta}), 6);
    auto a = coefficients(rng, blocks, 0.7);
    auto r = averages_equivalence_check(prefix, Ordinal{zeta}, Ordinal{xi}, a);
    l.add("||sum a e_q||_{xi-zeta} <= ||sum a zeta_i^L||_xi", Relation::le, r.markers_norm, r.averages_norm);
    l.add("||sum a zeta_i^L||_xi <= 12(zeta+1) ||sum a e_q||_{xi-zeta}", Relation::le, r.averages_norm,
          r.constant * r.markers_norm);
    l.add("||sum a zeta_i^L||_xi <= 6(zeta+1) ||sum a e_k||_{xi-zeta}, k_i = max of block", Relation::le,
          r.averages_norm, Rational(6 * (zeta + 1)) * r.maxima_norm);
  });
}

void suite_combination(Runner& run) {
  run.trials(run.count_or(200), [&](std::mt19937_64& rng, Lines& l) {
    const auto p = static_cast<std::size_t>(uniform(rng, 1, 8));
    const auto q = static_cast<std::size_t>(uniform(rng, 1, 8));
    const auto width = static_cast<Element>(6);
    std::vector<RationalVector> x;
    for (std::size_t i = 0; i < p; ++i) {
      RationalVector v;
      while (v.empty())
        v = random_vector(rng, 4, width).reindexed([&](Element e) { return static_cast<Element>(i) * width + e; });
      x.push_back(std::move(v));
    }
    const Element span = static_cast<Element>(p) * width;
    std::vector<Element> cuts{0, span};
    for (std::size_t j = 1; j < q; ++j) cuts.push_back(uniform(rng, 1, span));
    std::sort(cuts.begin(), cuts.end());
    std::vector<FinSet> g;
    for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
      std::vector<Element> s;
      for (Element e = cuts[j] + 1; e <= cuts[j + 1]; ++e)
        if (coin(rng, 0.6)) s.push_back(e);
      g.emplace_back(std::move(s));
    }
    std::vector<Rational> a;
    for (std::size_t i = 0; i < p; ++i) a.push_back(rational(rng, 9, 5, false));
    const Rational c = combination_hypothesis_constant(x, g, a);
    auto r = combination_bound_check(x, g, a, c);
    l.add("|(sum a_i x_i)(U G_j)| <= 3C", Relation::le, r.observed, 3 * c);
  });
}

Rational two_power_inverse(Element k) {
  mpz_class den = 1;
  den <<= static_cast<mp_bitcnt_t>(k);
  return Rational(mpz_class(1), den);
}

void suite_decay(Runner& run) {
  run.require_level(1, 3);
  run.trials(run.count_or(200), [&](std::mt19937_64& rng, Lines& l) {
    const unsigned xi = run.level(l, 1, 3);
    const Ordinal zeta{static_cast<unsigned>(uniform(rng, 1, xi))};
    const auto p = static_cast<std::size_t>(uniform(rng, 1, 4));
    std::vector<RationalVector> x;
    Element next = uniform(rng, 1, 4);
    static const Rational kTheta[] = {Rational(1, 2), Rational(2, 3), Rational(9, 10)};
    for (std::size_t n = 0; n < p; ++n) {
      auto offsets = sized_subset(rng, 0, 7, static_cast<std::size_t>(uniform(rng, 1, 5)));
      RationalVector y;
      for (Element o : offsets) y.set(next + o, rational(rng, 9, 5));
      if (n > 0) {
        const Rational scale = kTheta[uniform(rng, 0, 2)] /
                               (norm_value(y, Ordinal{zeta.value - 1}) / two_power_inverse(x.back().support().max()));
        y *= scale;
      }
      next = y.support().max() + 1 + uniform(rng, 0, 3);
      x.push_back(std::move(y));
    }
    Rational b = 0;
    for (const auto& v : x) b = std::max<Rational>(b, norm_value(v, Ordinal{xi}));
    static const Rational kSlack[] = {Rational(1, 8), Rational(1, 2), Rational(1)};
    b += kSlack[uniform(rng, 0, 2)];
    std::vector<Rational> a;
    for (std::size_t n = 0; n < p; ++n) a.push_back(rational(rng, 9, 5, false));

    RationalVector sum, pos, neg;
    for (std::size_t n = 0; n < p; ++n) sum += a[n] * x[n];
    for (const auto& [i, v] : sum.entries()) (v > 0 ? pos : neg).set(i, ::abs(v));
    // A random admissible H and the two sets maximising the signed sum.
    std::vector<Element> universe;
    for (Element e = 1; e < next; ++e)
      if (coin(rng, 0.5)) universe.push_back(e);
    universe.resize(admissible_run_end(universe, 0, zeta));
    const FinSet hs[] = {FinSet(universe), norm(pos, zeta).witness, norm(neg, zeta).witness};
    for (const auto& h : hs) {
      auto r = decay_bound_check(x, zeta, Ordinal{xi}, b, a, h);
      l.add("|(sum a_i x_i)(H)| <= (2+b) max|a_i|", Relation::le, r.observed, r.bound);
    }
  });
}

RationalVector level_one_average(Element start) {
  return repeated_averages(FinSet::interval(start, 2 * start - 1), Ordinal{1}, 1).front().vector;
}

void suite_block_subsequence(Runner& run) {
  run.require_level(1, 2);
  run.trials(run.count_or(60), [&](std::mt19937_64& rng, Lines& l) {
    const Ordinal xi{run.level(l, 1, 2)};
    std::vector<RationalVector> x;
    const Rational delta(1, 2);
    Rational b = 2;
    unsigned expected = 0;
    if (l.trial % 3 != 2) {
      // A coordinate above delta in every block.
      static const Rational kPeak[] = {Rational(3, 4), Rational(1), Rational(3, 2), Rational(2)};
      Element next = uniform(rng, 1, 3);
      for (auto n = uniform(rng, 1, 5); n > 0; --n) {
        auto where = sized_subset(rng, next, next + 5, static_cast<std::size_t>(uniform(rng, 1, 4)));
        RationalVector v;
        for (Element e : where) v.set(e, rational(rng, 1, 8, false) / 4);
        Rational peak = kPeak[uniform(rng, 0, 3)];
        v.set(where[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(where.size()) - 1))],
              coin(rng, 0.5) ? peak : Rational(-peak));
        next = v.support().max() + 1 + uniform(rng, 0, 2);
        x.push_back(std::move(v));
      }
      b = 0;
      for (const auto& v : x) b = std::max<Rational>(b, norm_value(v, xi));
      b += 1;
    } else {
      // Level-1 averages, the second one far enough out to decay, with an
      // optional block in between that does not.
      expected = 1;
      const Element s1 = uniform(rng, 2, 4);
      x.push_back(level_one_average(s1));
      if (coin(rng, 0.5)) x.push_back(level_one_average(2 * s1 + uniform(rng, 0, 2)));
      const Element s2 = std::max(x.back().support().max() + 1, (Element{1} << (2 * s1 - 1)) + 1) + uniform(rng, 0, 3);
      x.push_back(level_one_average(s2));
    }
    auto w = block_subsequence_witness(x, xi, delta, b);
    l.add("detected zeta", Relation::eq, Rational(w.zeta), Rational(expected));
    for (int r = 0; r < 4; ++r) {
      auto a = coefficients(rng, w.indices.size());
      auto res = block_subsequence_check(w, x, xi, a);
      l.add("||sum a e_m||_{xi-zeta} <= delta^{-1} ||sum a x_n||_xi", Relation::le, res.markers_norm,
            w.lower_constant * res.blocks_norm);
      l.add("||sum a x_n||_xi <= C ||sum a e_m||_{xi-zeta}, C = 12(2+b) or 4b", Relation::le,
            res.blocks_norm, w.upper_constant * res.markers_norm);
    }
  });
}

void suite_complemented(Runner& run) {
  run.require_level(1, 2);
  std::vector<unsigned> levels = run.options.xi ? std::vector<unsigned>{*run.options.xi} : std::vector<unsigned>{1, 2};
  for (unsigned xi : levels) {
    // F_4 at level 2 would hold about 5e9 integers; three blocks are built
    // and the projection runs on the first two.
    const std::size_t built = xi == 1 ? 8 : 3, projected = xi == 1 ? 8 : 2;
    auto basis = build_complemented_basis(Ordinal{xi}, built);
    ComplementedBasis head{basis.xi, {basis.f.begin(), basis.f.begin() + static_cast<std::ptrdiff_t>(projected)},
                           {basis.u.begin(), basis.u.begin() + static_cast<std::ptrdiff_t>(projected)}};
    const std::string tag = " [xi=" + std::to_string(xi) + "]";
    run.trials(1, [&](std::mt19937_64& rng, Lines& l) {
      for (const auto& line : basis_invariants(basis)) {
        Relation rel = line.claim.find("<=") != std::string::npos ? Relation::le
                       : line.claim.find('>') != std::string::npos ? Relation::gt
                                                                   : Relation::eq;
        l.add(line.claim + tag, rel, line.observed, line.bound);
        if (l.out.back().pass != line.pass) throw std::logic_error("relation mismatch for " + line.claim);
      }
      for (const auto& u : basis.u)
        l.add("P(u_n) = u_n" + tag, Relation::eq, (project_onto_basis(u, basis) - u).l1(), 0);
      // Points in no F_n.
      std::vector<Element> gaps;
      for (Element e = 1; e <= basis.f.back().max() + 3 && gaps.size() < 4096; ++e) {
        bool inside = std::any_of(basis.f.begin(), basis.f.end(), [&](const FinSet& f) { return f.min() <= e && e <= f.max(); });
        if (!inside) gaps.push_back(e);
      }
      for (int t = 0; t < 5; ++t) {
        RationalVector off;
        for (int k = 0; k < 6; ++k)
          off.set(gaps[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(gaps.size()) - 1))],
                  rational(rng, 9, 5));
        l.add("P(x) = 0 off the blocks" + tag, Relation::eq, project_onto_basis(off, basis).l1(), 0);
      }
      for (std::size_t k = 1; k <= 3; ++k) {
        auto n = l1_start_index(basis, k);
        if (!n) continue;
        l.truth("F_{n+1} u .. u F_{n+k} in S_xi (l_1^k certificate)" + tag, l1_block_certificate(basis, *n, k));
        if (xi != 1) continue;
        for (int t = 0; t < 5; ++t) {
          auto a = coefficients(rng, k, 1.0);
          RationalVector sum;
          for (const auto& [i, v] : a.entries()) sum += v * basis.u[*n + static_cast<std::size_t>(i) - 1];
          l.add("||sum a_i u_{n+i}||_xi = sum |a_i|" + tag, Relation::eq, norm_value(sum, Ordinal{xi}), a.l1());
        }
      }
    });
    for (std::size_t k = 1; k <= 3; ++k)
      if (!l1_start_index(basis, k))
        run.report.notes.push_back("xi=" + std::to_string(xi) + ": l_1^" + std::to_string(k) +
                                   " needs F_{n+k} with min F_n > k(n+k)^2, beyond the " +
                                   std::to_string(built) + " blocks built");
    const Element reach = head.f.back().max() + 3;
    run.trials(run.count_or(500), [&](std::mt19937_64& rng, Lines& l) {
      RationalVector x;
      const bool nonneg = l.trial % 3 != 0;
      for (auto k = uniform(rng, 1, 24); k > 0; --k) {
        Element e;
        if (coin(rng, 0.7)) {
          const FinSet& f = head.f[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(projected) - 1))];
          e = uniform(rng, f.min(), f.max());
        } else {
          e = uniform(rng, 1, reach);
        }
        Rational v = rational(rng, 9, 6);
        x.set(e, nonneg ? Rational(::abs(v)) : v);
      }
      l.add("||P x||_xi <= 18 xi ||x||_xi" + tag, Relation::le, norm_value(project_onto_basis(x, head), Ordinal{xi}),
            Rational(18 * xi) * norm_value(x, Ordinal{xi}));
    });
  }
}

void suite_uncomplemented(Runner& run) {
  run.require_level(1, 2);
  const unsigned xi = run.options.xi.value_or(1);
  // At level 2 the second block of consecutive integers from 12 is far past
  // the element cap.
  const std::size_t built = xi == 1 ? 12 : 1;
  auto ex = build_uncomplemented(Ordinal{xi}, built);
  auto blocks = repeated_averages(ex.m_prefix, Ordinal{xi}, built);
  run.trials(1, [&](std::mt19937_64&, Lines& l) {
    Rational scale = 0;
    for (std::size_t i = 0; i < built; ++i)
      scale = std::max<Rational>(scale, (1 - ex.a[i]) / (1 - blocks[i].vector.at(ex.q[i])));
    // w_n <= scale * xi_n^M coordinatewise, and the averages sum to at most xi+1.
    const Rational w_bound = scale * (xi + 1);
    RationalVector vsum, wsum;
    Rational previous = -1;
    for (std::size_t i = 0; i < built; ++i) {
      const auto& u = ex.u[i];
      l.add("|supp v_n n supp w_n| = 0", Relation::eq,
            count(ex.v[i].support().size() + ex.w[i].support().size() - ex.v[i].support().united(ex.w[i].support()).size()), 0);
      l.truth("u_n = v_n + w_n", u == ex.v[i] + ex.w[i]);
      if (i > 0) l.truth("supp u_{n-1} < supp u_n", ex.u[i - 1].support().max() < u.support().min());
      bool positive = std::all_of(u.entries().begin(), u.entries().end(), [](const auto& e) { return e.second > 0; });
      l.add("u_n convex", Relation::eq, positive ? u.total() : Rational(0), 1);
      l.add("||u_n||_xi = 1", Relation::eq, norm_value(u, ex.xi), 1);
      l.add("||v_n||_xi = a_n", Relation::eq, norm_value(ex.v[i], ex.xi), ex.a[i]);
      if (i > 0) l.add("a_n <= a_{n-1}", Relation::le, ex.a[i], ex.a[i - 1]);
      vsum += ex.v[i];
      wsum += ex.w[i];
      l.add("||sum_{i<=n} w_i||_xi <= (xi+1) max (1-a_n)/(1-xi_n(q_n))", Relation::le, norm_value(wsum, ex.xi), w_bound);
      Rational s = norm_value(vsum, ex.xi);
      if (i > 0) l.add("||sum_{i<=n} v_i||_xi > ||sum_{i<n} v_i||_xi", Relation::gt, s, previous);
      previous = s;
    }
  });
}

struct SuiteEntry {
  const char* name;
  void (*body)(Runner&);
};

const SuiteEntry kSuites[] = {
    {"norm-oracle", suite_norm_oracle}, {"L2.2", suite_first_blocks},   {"L2.3", suite_average_sums},
    {"L3.2", suite_tau},                {"L3.4", suite_domination},     {"L3.7", suite_decomposition},
    {"L3.8", suite_interlace},          {"L3.9", suite_averages},       {"L4.1", suite_combination},
    {"L4.2", suite_decay},              {"P4.3", suite_block_subsequence}, {"P4.4", suite_complemented},
    {"P4.5", suite_uncomplemented},
};

}  // namespace

const std::vector<std::string>& suite_selectors() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kSuites) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

SuiteReport run_suite(std::string_view selector, const SuiteOptions& options) {
  for (const auto& s : kSuites) {
    if (selector != s.name) continue;
    SuiteReport report;
    report.suite = s.name;
    report.seed = options.seed;
    Runner runner{report, options, {}};
    s.body(runner);
    return report;
  }
  throw std::invalid_argument("unknown suite \"" + std::string(selector) + "\"");
}

}  // namespace schreier
