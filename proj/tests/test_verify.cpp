#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "schreier/io.hpp"
#include "schreier/verify.hpp"

using namespace schreier;

TEST_CASE("condition-2 splitting agrees with the partition oracle") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<Element> v;
    for (Element e = 1; e <= 12; ++e)
      if (std::bernoulli_distribution(0.5)(rng)) v.push_back(e);
    if (v.empty()) continue;
    unsigned xi = static_cast<unsigned>(trial % 4);
    const bool member = oracle::member(v, xi);
    const bool maximal = oracle::maximal(v, xi);
    for (unsigned zeta = 0; zeta <= xi; ++zeta) {
      INFO(FinSet(v).to_string(), " xi=", xi, " zeta=", zeta);
      CHECK(splits_through_level(FinSet(v), Ordinal{xi}, Ordinal{zeta}, false) == member);
      CHECK(splits_through_level(FinSet(v), Ordinal{xi}, Ordinal{zeta}, true) == maximal);
    }
  }
  // {2,3,4}: pieces {2,3},{4} in S_1 with minima {2,4} in S_1.
  CHECK(splits_through_level(FinSet{2, 3, 4}, Ordinal{2}, Ordinal{1}, false));
  CHECK_THROWS_AS(splits_through_level(FinSet{1}, Ordinal{1}, Ordinal{2}, false), std::invalid_argument);
}

TEST_CASE("suites are reproducible and seed-dependent") {
  SuiteOptions o;
  o.trials = 40;
  o.seed = 9;
  o.keep_all_lines = true;
  auto a = run_suite("L3.8", o), b = run_suite("L3.8", o);
  CHECK(io::to_json(a).dump() == io::to_json(b).dump());
  CHECK(a.pass());
  CHECK(a.lines.size() == 80);
  o.seed = 10;
  CHECK(io::to_json(run_suite("L3.8", o)).dump() != io::to_json(a).dump());
}

TEST_CASE("suite option validation") {
  SuiteOptions o;
  CHECK_THROWS_AS(run_suite("L9.9", o), std::invalid_argument);
  o.xi = 0;
  CHECK_THROWS_AS(run_suite("L2.3", o), std::invalid_argument);
  CHECK(suite_selectors().size() == 13);
}

TEST_CASE("vector literals") {
  auto v = io::parse_vector(R"({"3":"-2/4","1":"1","7":5})");
  CHECK(v.at(1) == 1);
  CHECK(v.at(3) == Rational(-1, 2));
  CHECK(v.at(7) == 5);
  CHECK(io::to_json(v).dump() == R"({"1":"1","3":"-1/2","7":"5"})");
  CHECK_THROWS_AS(io::parse_vector(R"({"1":0.5})"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_vector(R"({"0":"1"})"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_vector(R"({"1":"1/0"})"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_vector("[1,2]"), std::invalid_argument);
}
