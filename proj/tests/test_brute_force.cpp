#include <doctest.h>

#include <random>

#include "monogen/brute_force.hpp"

using namespace monogen;

namespace {

IntVec v(std::initializer_list<long> xs) {
  IntVec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<Rat> rv(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("exhaustive scan on the worked example") {
  InequalitySystem sys{IntBox(v({2, 2})), {Constraint(LinearIneq{rv({1, 1}), Rat(2)})},
                       Mode::MaxFeasible};
  BruteResult got = enumerate_all(oracle_of(sys));
  CHECK(got.max_feasible == VecSet{v({2, 0}), v({1, 1}), v({0, 2})});
  CHECK(got.min_infeasible == VecSet{v({2, 1}), v({1, 2})});

  FeasOracle always{IntBox(v({1, 1})), [](const IntVec&) { return true; }};
  BruteResult full = enumerate_all(always);
  CHECK(full.max_feasible == VecSet{v({1, 1})});
  CHECK(full.min_infeasible.empty());

  FeasOracle never{IntBox(v({1, 1})), [](const IntVec&) { return false; }};
  BruteResult none = enumerate_all(never);
  CHECK(none.max_feasible.empty());
  CHECK(none.min_infeasible == VecSet{v({0, 0})});
}

TEST_CASE("scan respects the capacity limit") {
  FeasOracle o{IntBox(v({9, 9, 9})), [](const IntVec&) { return true; }};
  CHECK_THROWS_AS(enumerate_all(o, false, 100), std::length_error);
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long> coef(0, 4), cap_d(1, 4);
  for (int iter = 0; iter < 30; ++iter) {
    InequalitySystem sys;
    sys.box = IntBox(v({cap_d(rng), cap_d(rng), cap_d(rng), cap_d(rng)}));
    sys.constraints.emplace_back(LinearIneq{
        {Rat(coef(rng)), Rat(coef(rng)), Rat(coef(rng)), Rat(coef(rng))},
        Rat(coef(rng) + 2)});
    FeasOracle o = oracle_of(sys);
    BruteResult serial = enumerate_all(o, false);
    BruteResult parallel = enumerate_all(o, true);
    CHECK(serial.max_feasible == parallel.max_feasible);
    CHECK(serial.min_infeasible == parallel.min_infeasible);
  }
}

TEST_CASE("the two families are antichains partitioning the box boundary") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<long> coef(0, 3), cap_d(1, 3);
  for (int iter = 0; iter < 40; ++iter) {
    InequalitySystem sys;
    sys.box = IntBox(v({cap_d(rng), cap_d(rng), cap_d(rng)}));
    PolynomialIneq p;
    p.n = 3;
    p.terms.push_back({Rat(1 + coef(rng)), {{0, 1}, {1, 1}}});
    p.terms.push_back({Rat(1 + coef(rng)), {{2, 2}}});
    p.t = Rat(coef(rng) + 1);
    sys.constraints.emplace_back(std::move(p));
    BruteResult got = enumerate_all(oracle_of(sys));

    for (const IntVec& x : got.max_feasible)
      for (const IntVec& y : got.max_feasible)
        if (x != y) CHECK_FALSE(dominates(x, y));
    for (const IntVec& x : got.min_infeasible)
      for (const IntVec& y : got.min_infeasible)
        if (x != y) CHECK_FALSE(dominates(x, y));

    // every box point lies under F or over I(F), never both
    IntVec x = zero_vec(3);
    do {
      bool below = false, above = false;
      for (const IntVec& m : got.max_feasible)
        if (dominates(m, x)) below = true;
      for (const IntVec& m : got.min_infeasible)
        if (dominates(x, m)) above = true;
      CHECK(below != above);
    } while (next_point(x, sys.box.c));
  }
}

TEST_CASE("system-level scan handles both modes") {
  InequalitySystem cover{IntBox(v({2, 2})), {Constraint(LinearIneq{rv({1, 1}), Rat(2)})},
                         Mode::MinFeasible};
  SystemBrute min_got = enumerate_system(cover);
  CHECK(min_got.primary == VecSet{v({2, 0}), v({1, 1}), v({0, 2})});
  CHECK(min_got.secondary.empty());

  InequalitySystem pack = cover;
  pack.mode = Mode::MaxFeasible;
  SystemBrute max_got = enumerate_system(pack);
  CHECK(max_got.primary == VecSet{v({2, 0}), v({1, 1}), v({0, 2})});
  CHECK(max_got.secondary == VecSet{v({2, 1}), v({1, 2})});
}
