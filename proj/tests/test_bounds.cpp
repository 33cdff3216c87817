#include <doctest.h>

#include <random>

#include "monogen/bounds.hpp"

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

const BoundReport* find_row(const std::vector<BoundReport>& rows,
                            const std::string& formula) {
  for (const BoundReport& r : rows)
    if (r.formula == formula) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("Mobius transform on small tables") {
  IntBox box(v({2, 2}));
  MobiusTable prod = mobius_transform(
      [](const IntVec& x) { return Rat(Int(x[0] * x[1])); }, box);
  IntVec y = zero_vec(2);
  do {
    Rat expect = (y[0] >= 1 && y[1] >= 1) ? Rat(1) : Rat(0);
    CHECK(prod.fhat.at(y) == expect);
  } while (next_point(y, box.c));

  MobiusTable constant =
      mobius_transform([](const IntVec&) { return Rat(5); }, box);
  y = zero_vec(2);
  do {
    CHECK(constant.fhat.at(y) == (sgn(y[0]) == 0 && sgn(y[1]) == 0 ? Rat(5) : Rat(0)));
  } while (next_point(y, box.c));

  IntBox line(v({3}));
  MobiusTable coord = mobius_transform(
      [](const IntVec& x) { return Rat(x[0]); }, line);
  CHECK(coord.fhat.at(v({0})) == 0);
  CHECK(coord.fhat.at(v({1})) == 1);
  CHECK(coord.fhat.at(v({2})) == 1);
  CHECK(coord.fhat.at(v({3})) == 1);
}

TEST_CASE("Mobius inversion round-trips random tables") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> val(-5, 9), cap_d(1, 2);
  for (int iter = 0; iter < 50; ++iter) {
    IntBox box(v({cap_d(rng), cap_d(rng), cap_d(rng)}));
    std::vector<Rat> table(box.volume(1000));
    for (Rat& q : table) {
      q = Rat(val(rng), 1 + iter % 3);
      q.canonicalize();
    }
    TableFn f = [&](const IntVec& x) {
      unsigned long long i = 0;
      for (std::size_t j = 0; j < 3; ++j)
        i = i * (mpz_get_ui(box.c[j].get_mpz_t()) + 1) + mpz_get_ui(x[j].get_mpz_t());
      return table[i];
    };
    MobiusTable mt = mobius_transform(f, box);
    IntVec x = zero_vec(3);
    do {
      CHECK(mt.reconstruct(x) == f(x));
    } while (next_point(x, box.c));
  }
}

TEST_CASE("Mobius coefficients of separable monotone integer sums are nonnegative") {
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<long> inc(0, 3), cap_d(1, 3);
  for (int iter = 0; iter < 30; ++iter) {
    IntBox box(v({cap_d(rng), cap_d(rng)}));
    std::vector<std::vector<Rat>> tabs(2);
    for (std::size_t j = 0; j < 2; ++j) {
      Rat acc = inc(rng);
      for (long k = 0; k <= mpz_get_si(box.c[j].get_mpz_t()); ++k) {
        tabs[j].push_back(acc);
        acc += inc(rng);
      }
    }
    TableFn f = [&](const IntVec& x) {
      return tabs[0][mpz_get_ui(x[0].get_mpz_t())] +
             tabs[1][mpz_get_ui(x[1].get_mpz_t())];
    };
    MobiusTable mt = mobius_transform(f, box);
    for (const auto& [y, coef] : mt.fhat) CHECK(sgn(coef) >= 0);
  }
}

TEST_CASE("arrangement cell counts") {
  CHECK(phi_cells(2, 3) == 7);
  CHECK(phi_cells(0, 0) == 1);
  CHECK(phi_cells(5, 0) == 1);
  CHECK(phi_cells(1, 4) == 5);
  CHECK(psi_cells(2, 2, 1) == 1632);
}

TEST_CASE("bound rows for the concrete formulas") {
  VecSet y3{v({2, 0}), v({1, 1}), v({0, 2})};
  auto lin_rows = bound_rows(sum_le_2(), y3);
  const BoundReport* b2 = find_row(lin_rows, "rn|Y|");
  REQUIRE(b2);
  CHECK(*b2->bound == Rat(6));  // r=1, n=2, |Y|=3
  CHECK_FALSE(b2->asymptotic());

  SeparableIneq sep{{rv({0, 1, 2}), rv({0, 1, 2})}, Rat(2)};
  InequalitySystem sep_sys{IntBox(v({2, 2})), {Constraint(sep)}, Mode::MaxFeasible};
  auto sep_rows = bound_rows(sep_sys, y3);
  const BoundReport* rt = find_row(sep_rows, "(R-t)|Y|");
  REQUIRE(rt);
  CHECK(*rt->bound == Rat(6));  // R=4, t=2, |Y|=3

  SocIneq soc{{rv({1, 1})}, rv({0, 0}), Rat(2)};
  InequalitySystem soc_sys{IntBox(v({2, 2})), {Constraint(soc)}, Mode::MaxFeasible};
  VecSet y1{v({1, 1})};
  auto soc_rows = bound_rows(soc_sys, y1);
  const BoundReport* sr = find_row(soc_rows, "Phi_d(n(n-1)/2)n|Y|");
  REQUIRE(sr);
  CHECK(*sr->bound == Rat(4));  // Phi_1(1)=2, n=2, |Y|=1

  PolynomialIneq poly;
  poly.n = 2;
  poly.terms.push_back({Rat(1), {{0, 1}, {1, 1}}});
  poly.t = 1;
  InequalitySystem poly_sys{IntBox(v({1, 1})), {Constraint(poly)}, Mode::MaxFeasible};
  auto poly_rows = bound_rows(poly_sys, y1);
  const BoundReport* b3 = find_row(poly_rows, "sp(2|Y|+1)^p");
  REQUIRE(b3);
  CHECK(*b3->bound == Rat(18));  // s=1, p=2, (2+1)^2 = 9
  CHECK(find_row(poly_rows, "(|H|+(1+rho n)t|Y|)|Y|"));
  CHECK(find_row(poly_rows, "min{R-t,|H|+(1+2^d n)t|Y|}|Y|"));
  CHECK(find_row(poly_rows, "union"));  // several formulas apply

  InequalitySystem min_sys = sum_le_2();
  min_sys.mode = Mode::MinFeasible;
  auto min_rows = bound_rows(min_sys, y3);
  REQUIRE(min_rows.size() == 1);
  CHECK(min_rows[0].formula == "|Y|^{o(log L)}");
  CHECK(min_rows[0].asymptotic());
  CHECK(min_rows[0].pass());
}

TEST_CASE("2-monotonic row appears when every constraint verifies") {
  InequalitySystem sys{IntBox(v({2, 2})), {Constraint(LinearIneq{rv({3, 2}), Rat(4)})},
                       Mode::MaxFeasible};
  VecSet y{v({1, 0})};
  auto rows = bound_rows(sys, y);
  const BoundReport* row = find_row(rows, "r'sum q(y)");
  REQUIRE(row);
  CHECK(*row->bound == Rat(2));  // r'=1, q((1,0)) = 2
}

TEST_CASE("empirical dual intersection") {
  InequalitySystem sys = sum_le_2();
  VecSet full{v({2, 0}), v({1, 1}), v({0, 2})};
  CHECK(empirical_dual_intersection(sys, full) == VecSet{v({2, 1}), v({1, 2})});
  CHECK(empirical_dual_intersection(sys, {v({1, 1})}).empty());
  CHECK_THROWS_AS(empirical_dual_intersection(sys, {v({2, 2})}),
                  std::invalid_argument);
}

TEST_CASE("verified bounds pass on sample instances") {
  std::vector<InequalitySystem> samples;
  samples.push_back(sum_le_2());
  samples.push_back({IntBox(v({2, 2})),
                     {Constraint(SeparableIneq{{rv({0, 1, 2}), rv({0, 2, 3})}, Rat(3)})},
                     Mode::MaxFeasible});
  samples.push_back({IntBox(v({2, 2})),
                     {Constraint(SocIneq{{rv({1, 0}), rv({0, 1})}, rv({0, 0}), Rat(2)})},
                     Mode::MaxFeasible});
  for (const InequalitySystem& sys : samples) {
    auto rows = verify_bounds(sys, 25, 7);
    CHECK_FALSE(rows.empty());
    for (const BoundReport& r : rows) CHECK(r.pass());
  }
}

TEST_CASE("intersection lemma on the extremal family") {
  IntersectionLemmaInput in;
  in.u_size = 4;
  in.w.assign(4, Rat(1));
  for (std::size_t i = 0; i < 4; ++i) in.s_family.push_back({i});
  in.t_family.push_back({});
  in.t1 = 0;
  in.t2 = 1;
  IntersectionLemmaResult res = intersection_lemma_check(in);
  CHECK(res.applicable);
  CHECK(res.part_i);   // 4 <= 4, equality
  CHECK(res.part_ii);  // 4 <= (4-0)/1 * 1

  in.t2 = 5;  // singletons no longer reach the upper threshold
  CHECK_FALSE(intersection_lemma_check(in).applicable);

  in.t2 = Rat(0);
  CHECK_THROWS_AS(intersection_lemma_check(in), std::invalid_argument);
  in.t2 = 1;
  in.w.pop_back();
  CHECK_THROWS_AS(intersection_lemma_check(in), std::invalid_argument);
  in.w.push_back(Rat(1));
  in.s_family.push_back({9});
  CHECK_THROWS_AS(intersection_lemma_check(in), std::invalid_argument);
}

TEST_CASE("intersection lemma on random precondition-satisfying families") {
  std::mt19937_64 rng(61);
  int built = 0;
  while (built < 200) {
    std::uniform_int_distribution<std::size_t> usz_d(2, 8);
    std::size_t usz = usz_d(rng);
    IntersectionLemmaInput in;
    in.u_size = usz;
    for (std::size_t i = 0; i < usz; ++i)
      in.w.emplace_back(std::uniform_int_distribution<long>(0, 5)(rng));
    std::uniform_int_distribution<int> pick(0, 1), count_d(2, 5);
    int sc = count_d(rng), tc = count_d(rng);
    for (int k = 0; k < sc; ++k) {
      std::set<std::size_t> s;
      for (std::size_t i = 0; i < usz; ++i)
        if (pick(rng)) s.insert(i);
      in.s_family.push_back(std::move(s));
    }
    for (int k = 0; k < tc; ++k) {
      std::set<std::size_t> t;
      for (std::size_t i = 0; i < usz; ++i)
        if (pick(rng)) t.insert(i);
      in.t_family.push_back(std::move(t));
    }
    in.t1 = Rat(std::uniform_int_distribution<long>(0, 5)(rng));
    in.t2 = in.t1 + 1 + std::uniform_int_distribution<long>(0, 3)(rng);
    IntersectionLemmaResult res = intersection_lemma_check(in);
    if (!res.applicable) continue;
    CHECK(res.part_i);
    CHECK(res.part_ii);
    ++built;
  }
}

TEST_CASE("distinct weight orders stay under the cell bounds") {
  SocIneq constant{{rv({0, 0, 0})}, rv({3, 2, 1}), Rat(1)};
  WeightOrderResult one = distinct_weight_orders(Constraint(constant), 500, 3);
  CHECK(one.distinct() == 1);
  CHECK(*one.perms.begin() == std::vector<std::size_t>{0, 1, 2});

  SocIneq ident{{rv({1, 0}), rv({0, 1})}, rv({0, 0}), Rat(1)};
  WeightOrderResult two = distinct_weight_orders(Constraint(ident), 10'000, 3);
  CHECK(two.distinct() == 2);
  CHECK(two.cell_bound == phi_cells(2, 1));
  CHECK(Int(static_cast<unsigned long>(two.distinct())) <= two.cell_bound);

  PsdIneq psd;
  psd.mats.push_back(SymMat::diag({Rat(1), Rat(0)}));
  psd.mats.push_back(SymMat::diag({Rat(0), Rat(1)}));
  psd.T = SymMat::identity(2);
  WeightOrderResult p = distinct_weight_orders(Constraint(psd), 10'000, 5);
  CHECK(p.cell_bound == psi_cells(2, 2, 1));
  CHECK(Int(static_cast<unsigned long>(p.distinct())) <= p.cell_bound);

  CHECK_THROWS_AS(
      distinct_weight_orders(Constraint(LinearIneq{rv({1}), Rat(1)}), 10, 1),
      std::invalid_argument);
}

TEST_CASE("bit length of a system's parameters") {
  InequalitySystem sys = sum_le_2();
  CHECK(bit_length_L(sys) > 0);
  InequalitySystem bigger = sys;
  std::get<LinearIneq>(bigger.constraints[0]).t = Rat(Int("123456789123456789"));
  CHECK(bit_length_L(bigger) > bit_length_L(sys));
}
