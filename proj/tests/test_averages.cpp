#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schreier/averages.hpp"
#include "schreier/errors.hpp"

using namespace schreier;

TEST_CASE("first level") {
  auto b = repeated_averages(FinSet::interval(1, 7), Ordinal{1}, 3);
  REQUIRE(b.size() == 3);
  CHECK(b[0].vector == RationalVector::unit(1));
  CHECK(b[1].vector == RationalVector::from_entries({{2, Rational(1, 2)}, {3, Rational(1, 2)}}));
  CHECK(b[2].support == FinSet::interval(4, 7));
  CHECK(b[2].vector.at(5) == Rational(1, 4));
  CHECK_THROWS_AS(repeated_averages(FinSet::interval(1, 7), Ordinal{1}, 4), InsufficientPrefix);
  try {
    repeated_averages(FinSet::interval(2, 5), Ordinal{1}, 2);
  } catch (const InsufficientPrefix& e) {
    CHECK(e.first_incomplete() == 2);
  }
  auto z = repeated_averages(FinSet{3, 8, 9}, Ordinal{0}, 3);
  CHECK(z[1].vector == RationalVector::unit(8));
}

TEST_CASE("structure") {
  for (unsigned xi = 1; xi <= 3; ++xi) {
    FinSet prefix = FinSet::interval(2, xi == 3 ? 2047 : 400);
    std::size_t count = complete_blocks(prefix, Ordinal{xi});
    REQUIRE(count >= 1);
    auto blocks = repeated_averages(prefix, Ordinal{xi}, count);
    auto dec = decompose(prefix, Ordinal{xi});
    for (std::size_t i = 0; i < count; ++i) {
      CHECK(blocks[i].vector.total() == 1);
      CHECK(blocks[i].vector.support() == dec.blocks[i]);
      CHECK(is_member(blocks[i].support, Ordinal{xi}));
      for (const auto& [idx, v] : blocks[i].vector.entries()) CHECK(v > 0);
    }
  }
}

TEST_CASE("sum bound") {
  // e_1 + (e_2+e_3)/2 + (e_4+..+e_7)/4: every S_1 set collects at most 1.
  CHECK(average_sum_norm(FinSet::interval(1, 7), Ordinal{1}, 3).value == 1);
  CHECK(average_sum_norm(FinSet{4, 9, 10, 20}, Ordinal{0}, 4).value == 1);
  auto r = average_sum_norm(FinSet::interval(3, 30), Ordinal{2}, 1);
  CHECK(r.value <= 3);
}
