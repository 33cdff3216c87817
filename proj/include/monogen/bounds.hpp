#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "monogen/constraints.hpp"
#include "monogen/dualization.hpp"

namespace monogen {

// ---------------------------------------------------------------------------
// Mobius machinery

struct MobiusTable {
  IntBox box;
  std::map<IntVec, Rat, LexLess> fhat;

  // Sum of fhat over {y : y <= x}; equals f(x) by inversion.
  Rat reconstruct(const IntVec& x) const;
};

MobiusTable mobius_transform(const TableFn& f, const IntBox& box,
                             unsigned long long cap = kScanCap);

// ---------------------------------------------------------------------------
// Arrangement cell counts

// Phi_d(m) = sum_{i=0}^d C(m, i): cells of m hyperplanes in R^d.
Int phi_cells(unsigned d, const Int& m);
// Psi_{d,D}(m) = 2(2D)^d sum_{i=0}^d 2^i C(4m+1, i): degree-D surfaces.
Int psi_cells(unsigned d, unsigned D, const Int& m);

// ---------------------------------------------------------------------------
// Dual-bound reports

// Total bit-length of all numerators and denominators of the system's
// parameters (constraints plus box corner).
Int bit_length_L(const InequalitySystem& sys);

struct BoundReport {
  std::string formula;       // e.g. "rn|Y|", "(R-t)|Y|", "union"
  std::string classes;       // constraint classes the row covers
  std::optional<Rat> bound;  // empty: asymptotic, report-only
  unsigned long long measured = 0;
  std::size_t y_size = 0;
  std::map<std::string, std::string> params;

  bool asymptotic() const { return !bound.has_value(); }
  bool pass() const {
    return asymptotic() || Rat(static_cast<unsigned long>(measured)) <= *bound;
  }
};

// Every bound row applicable to the system for the subset Y (union rule over
// constraints; a formula row appears only when it covers every constraint).
// `measured` fields are left zero.
std::vector<BoundReport> bound_rows(const InequalitySystem& sys, const VecSet& y);

// |I(Y) n I(F)| by brute force; throws std::invalid_argument unless Y is a
// subset of the maximal (<=-mode) or minimal (>=-mode) feasible family.
VecSet empirical_dual_intersection(const InequalitySystem& sys, const VecSet& y);

// Random subsets Y of F; every row filled with its measured count.
std::vector<BoundReport> verify_bounds(const InequalitySystem& sys,
                                       unsigned trials, unsigned long long seed);

// ---------------------------------------------------------------------------
// Intersection Lemma

struct IntersectionLemmaInput {
  std::size_t u_size = 0;                       // U = {0,...,u_size-1}
  std::vector<Rat> w;                           // nonnegative weights on U
  std::vector<std::set<std::size_t>> s_family;  // S
  std::vector<std::set<std::size_t>> t_family;  // T
  Rat t1, t2;                                   // thresholds, t1 < t2
};

struct IntersectionLemmaResult {
  bool applicable = false;  // preconditions hold
  bool part_i = false;      // |S| <= sum_T |U \ T|
  bool part_ii = false;     // |S| <= (w(U)-t1)/(t2-t1) |T|
};

IntersectionLemmaResult intersection_lemma_check(const IntersectionLemmaInput& in);

// ---------------------------------------------------------------------------
// Sorting-permutation sampling (SOC / PSD cell-bound evidence)

struct WeightOrderResult {
  std::set<std::vector<std::size_t>> perms;  // observed sorting permutations
  Int cell_bound;                            // phi/psi upper bound

  std::size_t distinct() const { return perms.size(); }
};

// Samples u from the nonnegative unit ball (SOC) or the unit ball (PSD) and
// records the descending sorting permutation of the induced weights, ties
// broken by ascending index.
WeightOrderResult distinct_weight_orders(const Constraint& c, std::size_t samples,
                                         unsigned long long seed);

}  // namespace monogen
