#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "schreier/errors.hpp"
#include "schreier/family.hpp"

using namespace schreier;

namespace {

std::vector<Element> random_set(std::mt19937_64& rng, std::size_t max_len, Element max_elem) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Element> el(1, max_elem);
  std::vector<Element> v;
  for (std::size_t n = len(rng); n > 0; --n) v.push_back(el(rng));
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

TEST_CASE("membership on hand-checked sets") {
  CHECK(is_member(FinSet{2, 4, 5, 6}, Ordinal{2}));
  CHECK(is_member(FinSet{3, 4, 5}, Ordinal{1}));
  CHECK_FALSE(is_member(FinSet{2, 3, 4}, Ordinal{1}));
  CHECK_FALSE(is_member(FinSet{1, 2}, Ordinal{1}));
  CHECK(is_member(FinSet{}, Ordinal{0}));
  CHECK_FALSE(is_member(FinSet{5, 6}, Ordinal{0}));
}

TEST_CASE("membership agrees with partition search") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 3000; ++trial) {
    auto v = random_set(rng, 9, 14);
    unsigned xi = static_cast<unsigned>(trial % 4);
    INFO(FinSet(v).to_string(), " xi=", xi);
    CHECK(is_member(v, Ordinal{xi}) == oracle::member(v, xi));
  }
}

TEST_CASE("maximality") {
  CHECK(is_maximal(FinSet{2, 5}, Ordinal{1}));
  CHECK_FALSE(is_maximal(FinSet{2, 5}, Ordinal{2}));
  CHECK_FALSE(is_maximal(FinSet{}, Ordinal{1}));
  CHECK_THROWS_AS(is_maximal(FinSet{3, 4, 5, 6}, Ordinal{1}), std::invalid_argument);

  std::mt19937_64 rng(11);
  int seen_maximal = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    auto v = random_set(rng, 7, 10);
    unsigned xi = static_cast<unsigned>(trial % 3);
    if (!oracle::member(v, xi)) continue;
    bool m = is_maximal(FinSet(v), Ordinal{xi});
    seen_maximal += m;
    CHECK(m == oracle::maximal(v, xi));
  }
  CHECK(seen_maximal > 0);
}

TEST_CASE("decomposition and tau") {
  auto d = decompose(FinSet::interval(1, 7), Ordinal{1});
  REQUIRE(d.blocks.size() == 3);
  CHECK(d.blocks[0] == FinSet{1});
  CHECK(d.blocks[1] == FinSet{2, 3});
  CHECK(d.blocks[2] == FinSet{4, 5, 6, 7});
  CHECK(d.remainder.empty());

  auto d2 = decompose(FinSet::interval(1, 9), Ordinal{1});
  CHECK(d2.remainder == FinSet{8, 9});
  CHECK(tau(FinSet{1, 2}, Ordinal{1}) == 2);
  CHECK(tau(FinSet{1}, Ordinal{1}) == 1);
  CHECK_THROWS(tau(FinSet{}, Ordinal{1}));

  // Every block is a maximal member, and blocks plus remainder rebuild the prefix.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    auto v = random_set(rng, 12, 30);
    unsigned xi = static_cast<unsigned>(trial % 3);
    auto dec = decompose(FinSet(v), Ordinal{xi});
    std::vector<Element> rebuilt;
    for (const auto& b : dec.blocks) {
      CHECK(oracle::maximal(std::vector<Element>(b.begin(), b.end()), xi));
      rebuilt.insert(rebuilt.end(), b.begin(), b.end());
    }
    rebuilt.insert(rebuilt.end(), dec.remainder.begin(), dec.remainder.end());
    CHECK(rebuilt == v);
    std::vector<Element> rem(dec.remainder.begin(), dec.remainder.end());
    CHECK(oracle::member(rem, xi));
  }
}

TEST_CASE("enumeration") {
  auto all = enumerate_members(FinSet::interval(1, 4), Ordinal{1}, false);
  // {}, 4 singletons, {2,3},{2,4},{3,4},{3,4}... counted by the oracle.
  std::size_t expected = 0;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<Element> f;
    for (Element i = 0; i < 4; ++i)
      if (mask >> i & 1) f.push_back(i + 1);
    expected += oracle::member(f, 1);
  }
  CHECK(all.size() == expected);
  CHECK(all.front().empty());
  CHECK_THROWS_AS(enumerate_members(FinSet::interval(5, 30), Ordinal{2}, false, {1000}),
                  BudgetExceeded);

  std::vector<FinSet> walked;
  for_each_universe_maximal(FinSet::interval(2, 6), Ordinal{1},
                            [&](const FinSet& f) { walked.push_back(f); });
  for (const auto& f : walked) CHECK(f.size() <= 3);
  CHECK(std::find(walked.begin(), walked.end(), FinSet{2, 3}) != walked.end());
  CHECK(std::find(walked.begin(), walked.end(), FinSet{3, 4, 5}) != walked.end());
  CHECK(std::find(walked.begin(), walked.end(), FinSet{2}) == walked.end());
}

TEST_CASE("constants chain") {
  auto e = constants_chain(2, Ordinal{2});
  REQUIRE(e.size() == 3);
  CHECK(e[0] == 1);
  CHECK(e[1] == 22);
  CHECK(e[2] == 720);
}

TEST_CASE("streaming greedy step matches membership") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    auto v = random_set(rng, 10, 20);
    unsigned xi = static_cast<unsigned>(trial % 4);
    std::vector<std::uint32_t> slots(xi, 0);
    std::size_t tops = 0;
    for (std::size_t i = 0; i < v.size(); ++i) tops += greedy_push(slots.data(), xi, v[i], i > 0);
    INFO(FinSet(v).to_string(), " xi=", xi);
    if (v.empty()) continue;
    CHECK((tops == 1) == is_member(v, Ordinal{xi}));
    CHECK(tops == tau(FinSet(v), Ordinal{xi}));
    if (tops == 1) {
      bool saturated = std::all_of(slots.begin(), slots.end(), [](auto s) { return s == 0; });
      CHECK(saturated == is_maximal(FinSet(v), Ordinal{xi}));
    }
  }
}
