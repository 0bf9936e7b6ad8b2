#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "schreier/family.hpp"
#include "schreier/norm.hpp"

using namespace schreier;

namespace {

RationalVector ones(Element lo, Element hi) {
  std::vector<RationalVector::Entry> e;
  for (Element i = lo; i <= hi; ++i) e.emplace_back(i, Rational(1));
  return RationalVector::from_entries(e);
}

}  // namespace

TEST_CASE("evaluate") {
  auto x = RationalVector::from_entries({{1, Rational(-1, 2)}, {4, Rational(1, 3)}});
  auto [s, a] = evaluate(x, FinSet{1, 4});
  CHECK(s == Rational(-1, 6));
  CHECK(a == Rational(5, 6));
}

TEST_CASE("hand-checked norms") {
  auto r = norm(ones(1, 3), Ordinal{1});
  CHECK(r.value == 2);
  CHECK(r.witness == FinSet{2, 3});
  CHECK(norm(ones(4, 9), Ordinal{1}).value == 5);
  CHECK(norm(ones(4, 9), Ordinal{0}).value == 1);
  CHECK(norm(RationalVector{}, Ordinal{3}).value == 0);
  CHECK(norm(RationalVector{}, Ordinal{3}).witness.empty());
  // A set starting at 1 is a single S_1 piece, so {2,3} + {4..7} wins.
  CHECK(norm(ones(1, 7), Ordinal{2}).value == 6);
  CHECK(norm(ones(1, 7), Ordinal{2}).witness == FinSet::interval(2, 7));
  CHECK(norm(ones(1, 8), Ordinal{2}).value == 6);
}

TEST_CASE("dynamic program matches subset oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1500; ++trial) {
    auto x = oracle::random_vector(rng, 11, 16);
    unsigned xi = static_cast<unsigned>(trial % 5);
    INFO(x.to_json_text(), " xi=", xi);
    auto par = norm(x, Ordinal{xi});
    auto ser = norm_serial(x, Ordinal{xi});
    Rational expect = oracle::norm(x, xi);
    CHECK(par.value == expect);
    CHECK(ser.value == expect);
    CHECK(par.witness == ser.witness);
    CHECK(is_member(par.witness, Ordinal{xi}));
    CHECK(evaluate(x, par.witness).second == par.value);
  }
}

TEST_CASE("larger supports against library brute force") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    auto x = oracle::random_vector(rng, 18, 24, 20, 3);
    unsigned xi = 1 + static_cast<unsigned>(trial % 3);
    INFO(x.to_json_text(), " xi=", xi);
    auto fast = norm(x, Ordinal{xi});
    CHECK(fast.value == norm_bruteforce(x, Ordinal{xi}, {1u << 24}).value);
  }
}

TEST_CASE("wide coefficients take the multiprecision path") {
  mpz_class big = mpz_class(1) << 200;
  auto x = RationalVector::from_entries(
      {{2, Rational(big)}, {3, Rational(1, 7)}, {5, Rational(-big, 3)}, {9, Rational(1, 11)}});
  CHECK(norm(x, Ordinal{1}).value == oracle::norm(x, 1));
  CHECK(norm_serial(x, Ordinal{2}).value == oracle::norm(x, 2));
}
