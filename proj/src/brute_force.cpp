#include "monogen/brute_force.hpp"

#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace monogen {

namespace {

// x is maximal feasible iff feasible and every in-box increment is not.
bool is_max_feasible(const FeasOracle& o, const IntVec& x) {
  if (!o.feasible(x)) return false;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (x[j] < o.box.c[j] && o.feasible(unit_step(x, j, 1))) return false;
  return true;
}

bool is_min_infeasible(const FeasOracle& o, const IntVec& x) {
  if (o.feasible(x)) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (sgn(x[j]) == 0) continue;
    if (!o.feasible(unit_step(x, j, -1))) return false;
  }
  return true;
}

BruteResult scan_serial(const FeasOracle& o) {
  BruteResult res;
  IntVec x = zero_vec(o.box.dim());
  do {
    if (is_max_feasible(o, x)) res.max_feasible.insert(x);
    if (is_min_infeasible(o, x)) res.min_infeasible.insert(x);
  } while (next_point(x, o.box.c));
  return res;
}

BruteResult scan_parallel(const FeasOracle& o, unsigned long long vol) {
  BruteResult res;
#ifdef _OPENMP
  const int threads = omp_get_max_threads();
  std::vector<BruteResult> partial(threads);
#pragma omp parallel num_threads(threads)
  {
    BruteResult& mine = partial[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (long long i = 0; i < static_cast<long long>(vol); ++i) {
      IntVec x = decode_index(static_cast<unsigned long long>(i), o.box.c);
      if (is_max_feasible(o, x)) mine.max_feasible.insert(x);
      if (is_min_infeasible(o, x)) mine.min_infeasible.insert(x);
    }
  }
  for (BruteResult& p : partial) {
    res.max_feasible.merge(p.max_feasible);
    res.min_infeasible.merge(p.min_infeasible);
  }
#else
  (void)vol;
  res = scan_serial(o);
#endif
  return res;
}

}  // namespace

BruteResult enumerate_all(const FeasOracle& o, bool parallel, unsigned long long cap) {
  unsigned long long vol = o.box.volume(cap);
  return parallel ? scan_parallel(o, vol) : scan_serial(o);
}

SystemBrute enumerate_system(const InequalitySystem& sys, bool parallel,
                             unsigned long long cap) {
  SystemBrute out;
  if (sys.mode == Mode::MaxFeasible) {
    BruteResult r = enumerate_all(oracle_of(sys), parallel, cap);
    out.primary = std::move(r.max_feasible);
    out.secondary = std::move(r.min_infeasible);
    return out;
  }
  BruteResult r = enumerate_all(reflect(sys), parallel, cap);
  const IntVec& c = sys.box.c;
  for (const IntVec& y : r.max_feasible) {
    IntVec x(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) x[j] = c[j] - y[j];
    out.primary.insert(std::move(x));
  }
  return out;
}

}  // namespace monogen
