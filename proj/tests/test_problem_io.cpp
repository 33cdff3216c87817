#include <doctest.h>

#include "monogen/problem_io.hpp"

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

ProblemFile roundtrip(const ProblemFile& pf) {
  return parse_problem(serialize_problem(pf));
}

}  // namespace

TEST_CASE("parsing a linear problem") {
  ProblemFile pf = parse_problem(R"({
    "box": {"c": [2, 2]},
    "mode": "max_feasible",
    "constraints": [{"class": "linear", "a": [1, "1/2"], "t": 2}]
  })");
  REQUIRE(pf.box_c.has_value());
  CHECK(*pf.box_c == v({2, 2}));
  CHECK(pf.mode == Mode::MaxFeasible);
  REQUIRE(pf.constraints.size() == 1);
  const auto& lin = std::get<LinearIneq>(pf.constraints[0]);
  CHECK(lin.a == std::vector<Rat>{Rat(1), Rat(1, 2)});
  CHECK(lin.t == Rat(2));
}

TEST_CASE("auto box and min_feasible mode") {
  ProblemFile pf = parse_problem(R"({
    "box": {"c": "auto"},
    "mode": "min_feasible",
    "constraints": [{"class": "product_affine",
                     "factors": [{"a": [1, 1], "a0": 0}], "t": 1}]
  })");
  CHECK_FALSE(pf.box_c.has_value());
  CHECK(pf.mode == Mode::MinFeasible);
}

TEST_CASE("every class round-trips through serialization") {
  std::vector<Constraint> cs;
  cs.emplace_back(LinearIneq{rv({1, 2}), Rat(3, 2)});
  cs.emplace_back(SeparableIneq{{rv({0, 1}), rv({0, 2})}, Rat(2)});
  PolynomialIneq poly;
  poly.n = 2;
  poly.terms.push_back({Rat(2, 3), {{0, 1}, {1, 2}}});
  poly.t = 5;
  cs.emplace_back(poly);
  ProductAffineIneq pa;
  pa.factors.push_back({rv({1, 0}), Rat(1)});
  pa.factors.push_back({rv({0, 1}), Rat(0)});
  pa.t = 1;
  cs.emplace_back(pa);
  SupermodularTableIneq tab;
  tab.shape = v({1, 1});
  tab.values = {Rat(0), Rat(0), Rat(0), Rat(1)};
  tab.t = 1;
  cs.emplace_back(tab);
  cs.emplace_back(SocIneq{{rv({1, 0}), rv({0, 1})}, rv({1, 2}), Rat(4)});
  PsdIneq psd;
  psd.mats = {SymMat::diag({Rat(1), Rat(0)}), SymMat::diag({Rat(0), Rat(1, 2)})};
  psd.T = SymMat::identity(2);
  cs.emplace_back(psd);

  for (const Constraint& c : cs) {
    ProblemFile pf;
    pf.box_c = v({2, 2});
    pf.constraints.push_back(c);
    ProblemFile back = roundtrip(pf);
    CHECK(back.box_c == pf.box_c);
    CHECK(back.mode == pf.mode);
    CHECK(serialize_problem(back) == serialize_problem(pf));
  }
}

TEST_CASE("malformed documents are rejected with field context") {
  auto reject = [](const char* text, const char* needle) {
    CHECK_THROWS_WITH_AS(parse_problem(text), doctest::Contains(needle),
                         std::invalid_argument);
  };
  reject(R"([1, 2])", "expected a JSON object");
  reject(R"({"mode": "max_feasible", "constraints": []})", "missing field 'box'");
  reject(R"({"box": {"c": "auto"}, "mode": "max_feasible", "constraints": []})",
         "nonempty");
  reject(R"({"box": {"c": "auto"}, "mode": "both", "constraints": [
           {"class": "linear", "a": [1], "t": 1}]})",
         "$.mode");
  reject(R"({"box": {"c": "auto"}, "mode": "max_feasible", "extra": 1,
           "constraints": [{"class": "linear", "a": [1], "t": 1}]})",
         "unknown field 'extra'");
  reject(R"({"box": {"c": "auto"}, "mode": "max_feasible", "constraints": [
           {"class": "linear", "a": [1], "t": 1, "slack": 0}]})",
         "unknown field 'slack'");
  reject(R"({"box": {"c": "auto"}, "mode": "max_feasible", "constraints": [
           {"class": "mystery", "t": 1}]})",
         "unknown constraint class");
  reject(R"({"box": {"c": "auto"}, "mode": "max_feasible", "constraints": [
           {"class": "linear", "a": [1.5], "t": 1}]})",
         "$.constraints[0].a[0]");
  reject(R"({"box": {"c": "auto"}, "mode": "max_feasible", "constraints": [
           {"class": "linear", "a": ["1/0"], "t": 1}]})",
         "$.constraints[0].a[0]");
  reject(R"({"box": {"c": [1, "3/2"]}, "mode": "max_feasible", "constraints": [
           {"class": "linear", "a": [1, 1], "t": 1}]})",
         "expected an integer");
  reject(R"({"box": {"c": "big"}, "mode": "max_feasible", "constraints": [
           {"class": "linear", "a": [1], "t": 1}]})",
         "$.box.c");
  reject(R"({"box": {"c": "auto"}, "mode": "max_feasible", "constraints": [
           {"class": "polynomial", "n": 2, "t": 1,
            "terms": [{"coef": 1, "exps": {"0": 1}}]}]})",
         "1-based");
  reject(R"({"box": {"c": "auto"}, "mode": "max_feasible", "constraints": [
           {"class": "psd", "mats": [[[1, 2], [3, 1]]], "T": [[1, 0], [0, 1]]}]})",
         "not symmetric");
  reject(R"({"box": {"c": "auto"}, "mode": "max_feasible", "constraints": [
           {"class": "psd", "mats": [[[1, 0], [0, 1], [0, 0]]],
            "T": [[1, 0], [0, 1]]}]})",
         "not square");
  reject("not json at all", "problem file");
}

TEST_CASE("instantiation resolves boxes and validates constraints") {
  ProblemFile autopf = parse_problem(R"({
    "box": {"c": "auto"},
    "mode": "max_feasible",
    "constraints": [{"class": "polynomial", "n": 2, "t": 1,
                     "terms": [{"coef": 1, "exps": {"1": 1, "2": 1}}]}]
  })");
  CHECK(instantiate(autopf).box.c == v({1, 1}));

  // an explicit box is honored exactly, even beyond the derivable caps
  ProblemFile wide = parse_problem(R"({
    "box": {"c": [5, 5]},
    "mode": "max_feasible",
    "constraints": [{"class": "linear", "a": [1, 1], "t": 2}]
  })");
  CHECK(instantiate(wide).box.c == v({5, 5}));

  ProblemFile narrow = parse_problem(R"({
    "box": {"c": [1]},
    "mode": "max_feasible",
    "constraints": [{"class": "linear", "a": [1, 1], "t": 2}]
  })");
  CHECK_THROWS_WITH_AS(instantiate(narrow), doctest::Contains("fewer variables"),
                       std::invalid_argument);

  // validation runs against the requested sense
  ProblemFile bad = parse_problem(R"({
    "box": {"c": [1, 1]},
    "mode": "max_feasible",
    "constraints": [{"class": "supermodular_table", "shape": [1, 1],
                     "values": [0, 1, 1, 1], "t": 1}]
  })");
  CHECK_THROWS_AS(instantiate(bad), std::invalid_argument);  // not supermodular
  ProblemFile ge_ok = bad;
  ge_ok.mode = Mode::MinFeasible;
  CHECK_NOTHROW(instantiate(ge_ok));
}

TEST_CASE("output records round-trip") {
  OutputRecord r{EmissionTag::MaxFeasible, v({1, 0, 2})};
  CHECK(format_record(r) == "MAX_FEAS 1 0 2");
  OutputRecord back = parse_record("MAX_FEAS 1 0 2");
  CHECK(back.tag == EmissionTag::MaxFeasible);
  CHECK(back.vec == v({1, 0, 2}));

  CHECK(format_record({EmissionTag::MinInfeasible, v({3})}) == "MIN_INFEAS 3");
  CHECK(parse_record("MIN_FEAS 0 0").tag == EmissionTag::MinFeasible);
  CHECK_THROWS_AS(parse_record(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_record("WHAT 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_record("MAX_FEAS one"), std::invalid_argument);
}
