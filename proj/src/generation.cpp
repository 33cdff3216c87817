#include "monogen/generation.hpp"

#include <stdexcept>
#include <utility>

namespace monogen {

namespace {

IntVec complement(const IntVec& c, const IntVec& y) {
  check_same_dim(c, y);
  IntVec x(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) x[j] = c[j] - y[j];
  return x;
}

bool call(const FeasOracle& o, const IntVec& x, unsigned long long* calls) {
  if (calls) ++*calls;
  return o.feasible(x);
}

}  // namespace

FeasOracle oracle_of(const InequalitySystem& sys) {
  if (sys.mode != Mode::MaxFeasible)
    throw std::invalid_argument("oracle_of: >=-sense systems go through reflect()");
  return {sys.box, [sys](const IntVec& x) { return is_feasible(sys, x); }};
}

FeasOracle reflect(const InequalitySystem& ge_sys) {
  if (ge_sys.mode != Mode::MinFeasible)
    throw std::invalid_argument("reflect: expects a >=-sense system");
  IntVec c = ge_sys.box.c;
  return {ge_sys.box, [ge_sys, c](const IntVec& y) {
            return is_feasible(ge_sys, complement(c, y));
          }};
}

IntVec maximalize(const FeasOracle& o, IntVec x, unsigned long long* calls) {
  if (!o.box.contains(x) || !call(o, x, calls))
    throw std::invalid_argument("maximalize: starting point not feasible in the box");
  for (std::size_t j = 0; j < x.size(); ++j) {
    Int lo = x[j], hi = o.box.c[j];
    while (lo < hi) {
      Int mid = lo + (hi - lo + 1) / 2;
      IntVec y = x;
      y[j] = mid;
      if (call(o, y, calls))
        lo = mid;
      else
        hi = mid - 1;
    }
    x[j] = lo;
  }
  return x;
}

IntVec minimalize(const FeasOracle& o, IntVec x, unsigned long long* calls) {
  if (!o.box.contains(x) || call(o, x, calls))
    throw std::invalid_argument("minimalize: starting point not infeasible in the box");
  for (std::size_t j = 0; j < x.size(); ++j) {
    Int lo = 0, hi = x[j];
    while (lo < hi) {
      Int mid = (lo + hi) / 2;
      IntVec y = x;
      y[j] = mid;
      if (!call(o, y, calls))
        hi = mid;
      else
        lo = mid + 1;
    }
    x[j] = hi;
  }
  return x;
}

GenerationState joint_generate(const FeasOracle& o, const EmissionSink& sink,
                               std::optional<unsigned long long> limit,
                               const VecSet& seed_max) {
  GenerationState st;
  for (const IntVec& y : seed_max) {
    if (!st.confirmed_max.insert(y))
      throw std::invalid_argument("joint_generate: seed set is not an antichain");
  }
  unsigned long long emitted = 0;
  while (!limit || emitted < *limit) {
    st.dual_steps++;
    auto gap = find_uncovered(o.box, st.confirmed_max.members(),
                              st.confirmed_min.members());
    if (!gap) break;
    if (call(o, *gap, &st.oracle_calls)) {
      IntVec x = maximalize(o, std::move(*gap), &st.oracle_calls);
      st.confirmed_max.insert(x);
      ++emitted;
      if (!sink(EmissionTag::MaxFeasible, x)) break;
    } else {
      IntVec x = minimalize(o, std::move(*gap), &st.oracle_calls);
      st.confirmed_min.insert(x);
      ++emitted;
      if (!sink(EmissionTag::MinInfeasible, x)) break;
    }
  }
  return st;
}

GenerationState joint_generate(const InequalitySystem& sys, const EmissionSink& sink,
                               std::optional<unsigned long long> limit) {
  if (sys.mode == Mode::MaxFeasible) return joint_generate(oracle_of(sys), sink, limit);
  const IntVec& c = sys.box.c;
  return joint_generate(
      reflect(sys),
      [&](EmissionTag tag, const IntVec& y) {
        // wrapped maximal feasible y <-> minimal feasible c - y; the wrapped
        // minimal infeasible vectors have no direct reading and stay internal
        if (tag != EmissionTag::MaxFeasible) return true;
        return sink(EmissionTag::MinFeasible, complement(c, y));
      },
      limit);
}

GenStepResult gen_step(const InequalitySystem& sys, const VecSet& y) {
  FeasOracle o = sys.mode == Mode::MaxFeasible ? oracle_of(sys) : reflect(sys);
  VecSet seeds;
  for (const IntVec& v : y)
    seeds.insert(sys.mode == Mode::MaxFeasible ? v : complement(sys.box.c, v));
  for (const IntVec& v : seeds) {
    if (!o.box.contains(v) || !o.feasible(v))
      throw std::invalid_argument("gen_step: seed " + vec_to_string(v) +
                                  " is not feasible");
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] < o.box.c[j] && o.feasible(unit_step(v, j, 1)))
        throw std::invalid_argument("gen_step: seed " + vec_to_string(v) +
                                    " is not maximal");
    }
  }

  GenStepResult res;
  joint_generate(
      o,
      [&](EmissionTag tag, const IntVec& x) {
        if (tag == EmissionTag::MinInfeasible) {
          res.discarded++;
          return true;
        }
        res.new_max = sys.mode == Mode::MaxFeasible ? x : complement(sys.box.c, x);
        return false;
      },
      std::nullopt, seeds);
  return res;
}

}  // namespace monogen
