#include <doctest.h>

#include <random>

#include "monogen/generation.hpp"

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

InequalitySystem sum_le_2() {
  return {IntBox(v({2, 2})), {Constraint(LinearIneq{rv({1, 1}), Rat(2)})},
          Mode::MaxFeasible};
}

struct Collected {
  VecSet max_feas, min_infeas, min_feas;
  std::vector<std::pair<EmissionTag, IntVec>> order;
};

Collected run(const InequalitySystem& sys,
              std::optional<unsigned long long> limit = std::nullopt) {
  Collected got;
  joint_generate(sys,
                 [&](EmissionTag tag, const IntVec& x) {
                   got.order.emplace_back(tag, x);
                   VecSet& dst = tag == EmissionTag::MaxFeasible ? got.max_feas
                                 : tag == EmissionTag::MinInfeasible
                                     ? got.min_infeas
                                     : got.min_feas;
                   REQUIRE(dst.insert(x).second);  // no duplicate emissions
                   return !limit || got.order.size() < *limit;
                 },
                 limit);
  return got;
}

}  // namespace

TEST_CASE("coordinate sweeps reach extremal points") {
  FeasOracle o = oracle_of(sum_le_2());
  CHECK(maximalize(o, v({0, 0})) == v({2, 0}));
  CHECK(maximalize(o, v({0, 1})) == v({1, 1}));
  CHECK(maximalize(o, v({2, 0})) == v({2, 0}));
  CHECK(minimalize(o, v({2, 2})) == v({1, 2}));
  CHECK(minimalize(o, v({2, 1})) == v({2, 1}));

  unsigned long long calls = 0;
  maximalize(o, v({0, 0}), &calls);
  CHECK(calls > 0);
}

TEST_CASE("joint generation on the worked examples") {
  Collected got = run(sum_le_2());
  CHECK(got.max_feas == VecSet{v({2, 0}), v({1, 1}), v({0, 2})});
  CHECK(got.min_infeas == VecSet{v({2, 1}), v({1, 2})});

  PolynomialIneq prod;
  prod.n = 2;
  prod.terms.push_back({Rat(1), {{0, 1}, {1, 1}}});
  prod.t = 1;
  InequalitySystem footnote{IntBox(v({1, 1})), {Constraint(prod)},
                            Mode::MaxFeasible};
  Collected foot = run(footnote);
  CHECK(foot.max_feas == VecSet{v({1, 1})});
  CHECK(foot.min_infeas.empty());

  InequalitySystem empty{IntBox(v({3, 3})), {Constraint(LinearIneq{rv({1, 1}), Rat(-1)})},
                         Mode::MaxFeasible};
  Collected none = run(empty);
  CHECK(none.max_feas.empty());
  CHECK(none.min_infeas == VecSet{v({0, 0})});
}

TEST_CASE("reflection enumerates minimal feasible points of >= systems") {
  ProductAffineIneq pa;
  pa.factors.push_back({rv({1, 1, 0}), Rat(0)});
  pa.factors.push_back({rv({0, 1, 1}), Rat(0)});
  pa.t = 1;
  InequalitySystem trans{IntBox(v({1, 1, 1})), {Constraint(pa)}, Mode::MinFeasible};
  Collected got = run(trans);
  CHECK(got.min_feas == VecSet{v({0, 1, 0}), v({1, 0, 1})});
  CHECK(got.max_feas.empty());
  CHECK(got.min_infeas.empty());

  InequalitySystem cover{IntBox(v({2, 2})), {Constraint(LinearIneq{rv({1, 1}), Rat(2)})},
                         Mode::MinFeasible};
  CHECK(run(cover).min_feas == VecSet{v({2, 0}), v({1, 1}), v({0, 2})});

  InequalitySystem trivial{IntBox(v({2, 2})), {Constraint(LinearIneq{rv({1, 1}), Rat(0)})},
                           Mode::MinFeasible};
  CHECK(run(trivial).min_feas == VecSet{v({0, 0})});
}

TEST_CASE("the reflected oracle is the complement predicate") {
  InequalitySystem cover{IntBox(v({2, 2})), {Constraint(LinearIneq{rv({1, 1}), Rat(2)})},
                         Mode::MinFeasible};
  FeasOracle w = reflect(cover);
  CHECK(w.box.c == v({2, 2}));
  CHECK(w.feasible(v({0, 0})));   // c - y = (2,2), sum 4 >= 2
  CHECK(w.feasible(v({0, 2})));   // c - y = (2,0), sum 2 >= 2
  CHECK_FALSE(w.feasible(v({2, 1})));  // c - y = (0,1), sum 1 < 2
}

TEST_CASE("gen_step finds new maximal vectors or certifies completeness") {
  InequalitySystem sys = sum_le_2();

  GenStepResult grow = gen_step(sys, {v({1, 1})});
  REQUIRE(grow.new_max.has_value());
  CHECK((*grow.new_max == v({2, 0}) || *grow.new_max == v({0, 2})));

  GenStepResult done = gen_step(sys, {v({2, 0}), v({1, 1}), v({0, 2})});
  CHECK_FALSE(done.new_max.has_value());
  CHECK(done.discarded == 2);

  GenStepResult start = gen_step(sys, {});
  REQUIRE(start.new_max.has_value());

  CHECK_THROWS_AS(gen_step(sys, {v({1, 0})}), std::invalid_argument);  // not maximal
  CHECK_THROWS_AS(gen_step(sys, {v({2, 1})}), std::invalid_argument);  // infeasible

  InequalitySystem cover{IntBox(v({2, 2})), {Constraint(LinearIneq{rv({1, 1}), Rat(2)})},
                         Mode::MinFeasible};
  GenStepResult min_done =
      gen_step(cover, {v({2, 0}), v({1, 1}), v({0, 2})});
  CHECK_FALSE(min_done.new_max.has_value());
  GenStepResult min_grow = gen_step(cover, {v({1, 1})});
  REQUIRE(min_grow.new_max.has_value());
  CHECK((*min_grow.new_max == v({2, 0}) || *min_grow.new_max == v({0, 2})));
}

TEST_CASE("emission limits stop generation early") {
  Collected got = run(sum_le_2(), 2);
  CHECK(got.order.size() == 2);
}

TEST_CASE("generation matches an exhaustive scan on random systems") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> coef(0, 3), cap_d(1, 3);
  for (int iter = 0; iter < 100; ++iter) {
    InequalitySystem sys;
    sys.box = IntBox(v({cap_d(rng), cap_d(rng), cap_d(rng)}));
    sys.constraints.emplace_back(LinearIneq{
        {Rat(coef(rng)), Rat(coef(rng)), Rat(coef(rng))}, Rat(coef(rng) + 1)});
    sys.mode = iter % 2 ? Mode::MinFeasible : Mode::MaxFeasible;

    Collected got = run(sys);
    // exhaustive reference
    VecSet feas, max_ref, mininf_ref, minfeas_ref;
    IntVec x = zero_vec(3);
    do {
      bool ok = is_feasible(sys, x);
      if (ok) feas.insert(x);
    } while (next_point(x, sys.box.c));
    x = zero_vec(3);
    do {
      bool ok = feas.count(x);
      bool extremal = true;
      for (std::size_t j = 0; j < 3; ++j) {
        if (ok && x[j] < sys.box.c[j] && feas.count(unit_step(x, j, 1)))
          extremal = false;
        if (!ok && x[j] > 0 && !feas.count(unit_step(x, j, -1))) extremal = false;
        if (ok && sys.mode == Mode::MinFeasible && x[j] > 0 &&
            feas.count(unit_step(x, j, -1)))
          extremal = false;
      }
      if (sys.mode == Mode::MaxFeasible) {
        if (ok && extremal) max_ref.insert(x);
        if (!ok && extremal) mininf_ref.insert(x);
      } else if (ok) {
        bool minimal = true;
        for (std::size_t j = 0; j < 3; ++j)
          if (x[j] > 0 && feas.count(unit_step(x, j, -1))) minimal = false;
        if (minimal) minfeas_ref.insert(x);
      }
    } while (next_point(x, sys.box.c));

    if (sys.mode == Mode::MaxFeasible) {
      CHECK(got.max_feas == max_ref);
      CHECK(got.min_infeas == mininf_ref);
    } else {
      CHECK(got.min_feas == minfeas_ref);
    }
  }
}
