#include <doctest.h>

#include <random>

#include "monogen/rational.hpp"

using namespace monogen;

TEST_CASE("rational literals round-trip") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-2") == Rat(-2));
  CHECK(parse_rational("6/4") == Rat(3, 2));
  CHECK(to_string(Rat(3, 2)) == "3/2");
  CHECK(to_string(Rat(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("floor and bit lengths") {
  CHECK(floor_rat(Rat(7, 2)) == 3);
  CHECK(floor_rat(Rat(-7, 2)) == -4);
  CHECK(floor_rat(Rat(4)) == 4);
  CHECK(bit_length(Int(0)) == 0);
  CHECK(bit_length(Int(8)) == 4);
  CHECK(bit_length(Rat(3, 4)) == 5);
}

TEST_CASE("linear-plus-square-root comparisons are exact") {
  // sqrt(2) vs 3/2
  CHECK(compare_lin_sqrt(Rat(0), Rat(2), Rat(3, 2), Rat(0)) < 0);
  // sqrt(2) vs 7/5
  CHECK(compare_lin_sqrt(Rat(0), Rat(2), Rat(7, 5), Rat(0)) > 0);
  // 1 + sqrt(2) vs sqrt(2) + 1
  CHECK(compare_lin_sqrt(Rat(1), Rat(2), Rat(1), Rat(2)) == 0);
  // 2 + sqrt(2) vs 1 + sqrt(5): 3.414… vs 3.236…
  CHECK(compare_lin_sqrt(Rat(2), Rat(2), Rat(1), Rat(5)) > 0);
  // -3 + sqrt(9) vs 0
  CHECK(compare_lin_sqrt(Rat(-3), Rat(9), Rat(0), Rat(0)) == 0);
  // sqrt(8) vs 2 + sqrt(2): 2.828… vs 3.414…
  CHECK(compare_lin_sqrt(Rat(0), Rat(8), Rat(2), Rat(2)) < 0);
}

TEST_CASE("comparisons agree with floating evaluation away from ties") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-20, 20), nonneg(0, 40);
  for (int iter = 0; iter < 2000; ++iter) {
    Rat u1(num(rng), 1 + nonneg(rng)), u2(num(rng), 1 + nonneg(rng));
    Rat v1(nonneg(rng), 1 + nonneg(rng)), v2(nonneg(rng), 1 + nonneg(rng));
    double lhs = u1.get_d() + std::sqrt(v1.get_d());
    double rhs = u2.get_d() + std::sqrt(v2.get_d());
    if (std::abs(lhs - rhs) < 1e-9) continue;
    int expect = lhs < rhs ? -1 : 1;
    CHECK(compare_lin_sqrt(u1, v1, u2, v2) == expect);
  }
}

TEST_CASE("exact square roots") {
  REQUIRE(exact_sqrt(Rat(4, 9)).has_value());
  CHECK(*exact_sqrt(Rat(4, 9)) == Rat(2, 3));
  CHECK(*exact_sqrt(Rat(0)) == Rat(0));
  CHECK(*exact_sqrt(Rat(49)) == Rat(7));
  CHECK_FALSE(exact_sqrt(Rat(2)).has_value());
  CHECK_FALSE(exact_sqrt(Rat(1, 2)).has_value());
}
