#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "schreier/domination.hpp"
#include "schreier/errors.hpp"

using namespace schreier;

namespace {

SubseqPair random_pair(std::mt19937_64& rng, std::size_t n, Element span) {
  std::vector<Element> pool;
  for (Element e = 1; e <= span; ++e) pool.push_back(e);
  auto pick = [&] {
    std::vector<Element> p = pool;
    std::shuffle(p.begin(), p.end(), rng);
    p.resize(n);
    std::sort(p.begin(), p.end());
    return FinSet(p);
  };
  FinSet l = pick();
  return SubseqPair(l, pick());
}

SubseqPair shifted(std::size_t n) {
  return SubseqPair(FinSet::interval(1, static_cast<Element>(n)),
                    FinSet::interval(static_cast<Element>(n) + 1, 2 * static_cast<Element>(n)));
}

}  // namespace

TEST_CASE("trivial pairs") {
  auto id = SubseqPair(FinSet::interval(3, 20), FinSet::interval(3, 20));
  for (unsigned xi = 0; xi <= 3; ++xi) CHECK(d_truncated(id, Ordinal{xi}, DMode::exhaustive).value == 1);
  std::mt19937_64 rng(1);
  auto p = random_pair(rng, 9, 30);
  CHECK(d_truncated(p, Ordinal{0}, DMode::exhaustive).value == 1);
  CHECK_THROWS_AS(SubseqPair(FinSet{1, 2}, FinSet{3}), std::invalid_argument);
}

TEST_CASE("dynamic program against subset oracle, xi <= 1") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    unsigned xi = static_cast<unsigned>(trial % 2);
    auto p = random_pair(rng, 1 + trial % 9, 14);
    std::size_t best = 0;
    const auto mv = p.m().view();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << mv.size()); ++mask) {
      std::vector<Element> a, b;
      for (std::size_t i = 0; i < mv.size(); ++i)
        if (mask >> i & 1) {
          a.push_back(mv[i]);
          b.push_back(p.l()[i]);
        }
      if (oracle::member(a, xi)) best = std::max(best, oracle::tau(b, xi));
    }
    INFO("L=", p.l().to_string(), " M=", p.m().to_string(), " xi=", xi);
    CHECK(d_truncated(p, Ordinal{xi}, DMode::exhaustive).value == best);
  }
}

TEST_CASE("dynamic program against prefix-maximal enumeration") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    unsigned xi = static_cast<unsigned>(trial % 4);
    auto p = random_pair(rng, 2 + trial % 13, 30);
    auto dp = d_truncated(p, Ordinal{xi}, DMode::exhaustive);
    auto en = d_truncated_enumerated(p, Ordinal{xi});
    INFO("L=", p.l().to_string(), " M=", p.m().to_string(), " xi=", xi);
    CHECK(dp.value == en.value);
    CHECK(dp.exact);
    CHECK(is_member(dp.witness, Ordinal{xi}));
    CHECK(dp.witness.is_subset_of(p.m()));
    CHECK(tau(p.preimage(dp.witness), Ordinal{xi}) == dp.value);
  }
}

TEST_CASE("nested prefixes") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    unsigned xi = 1 + static_cast<unsigned>(trial % 2);
    auto p = random_pair(rng, 16, 40);
    auto full = d_truncated(p, Ordinal{xi}, DMode::exhaustive);
    REQUIRE(full.prefix_values.size() == 16);
    CHECK(full.prefix_values.back() == full.value);
    for (std::size_t t = 1; t <= 16; ++t) {
      if (t > 1) CHECK(full.prefix_values[t - 1] >= full.prefix_values[t - 2]);
      if (t % 5 == 0) {
        SubseqPair cut(p.l().slice(0, t), p.m().slice(0, t));
        CHECK(d_truncated(cut, Ordinal{xi}, DMode::exhaustive).value == full.prefix_values[t - 1]);
      }
    }
    auto h = d_truncated(p, Ordinal{xi}, DMode::heuristic, {}, 4);
    CHECK_FALSE(h.exact);
    CHECK(h.value <= full.value);
    CHECK(tau(p.preimage(h.witness), Ordinal{xi}) == h.value);
  }
}

TEST_CASE("shifted pair grows") {
  std::size_t prev = 0;
  for (std::size_t n : {10, 20, 40}) {
    auto d = d_truncated(shifted(n), Ordinal{1}, DMode::exhaustive);
    MESSAGE("shifted pair N=", n, " d_1=", d.value);
    CHECK(d.value > prev);
    prev = d.value;
  }
  for (std::size_t n : {10, 20})
    CHECK(d_truncated(shifted(n), Ordinal{1}, DMode::exhaustive).value ==
          d_truncated_enumerated(shifted(n), Ordinal{1}, {1u << 26}).value);
  // Goldens.
  CHECK(d_truncated(shifted(10), Ordinal{1}, DMode::exhaustive).value == 4);
  CHECK(d_truncated(shifted(20), Ordinal{1}, DMode::exhaustive).value == 5);
  CHECK(d_truncated(shifted(40), Ordinal{1}, DMode::exhaustive).value == 6);
  CHECK_THROWS_AS(d_truncated(shifted(40), Ordinal{2}, DMode::exhaustive, {50}), BudgetExceeded);
}

TEST_CASE("domination and ratio witnesses") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    unsigned xi = static_cast<unsigned>(trial % 3);
    auto p = random_pair(rng, 10, 35);
    auto d = d_truncated(p, Ordinal{xi}, DMode::exhaustive);
    auto a = oracle::random_vector(rng, 10, 10);
    CHECK(domination_check(p, Ordinal{xi}, a, d.value));
    if (d.value >= 2) {
      auto w = ratio_witness(p, Ordinal{xi}, d.value);
      CHECK(w.norm_l <= Rational(xi + 1));
      CHECK(w.norm_m >= Rational(static_cast<long>(d.value - 1)));
    } else {
      CHECK_THROWS_AS(ratio_witness(p, Ordinal{xi}, 2), NoWitness);
    }
  }
  auto id = SubseqPair(FinSet::interval(1, 8), FinSet::interval(1, 8));
  CHECK_THROWS_AS(ratio_witness(id, Ordinal{1}, 2), NoWitness);
}

TEST_CASE("genericity table") {
  auto a = genericity_demo(30, Ordinal{1}, 4, 77);
  auto b = genericity_demo(30, Ordinal{1}, 4, 77);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].lm.value == b[i].lm.value);
    CHECK(a[i].ml.value == b[i].ml.value);
    if (i > 0 && a[i].sample == a[i - 1].sample) CHECK(a[i].lm.value >= a[i - 1].lm.value);
  }
  for (const auto& r : genericity_demo(10, Ordinal{0}, 3, 1)) {
    CHECK(r.lm.value == 1);
    CHECK(r.ml.value == 1);
  }
}
