#pragma once

#include <optional>

#include "monogen/lattice.hpp"

namespace monogen {

// DUAL(C, A, B): A an antichain in the box, B a subset of I(A).
struct DualInstance {
  IntBox box;
  Antichain a{Orientation::MaximalKept};
  VecSet b;
};

struct DualOutcome {
  // Engaged: a new member of I(A)\B.  Empty: B = I(A) certified.
  std::optional<IntVec> witness;

  bool is_dual() const { return !witness.has_value(); }
};

// x is a minimal vector of the box dominated by no member of A.
bool is_in_IA(const IntBox& box, const Antichain& a, const IntVec& x);

// Exact I(A) over the candidate grid; capacity-limited.
VecSet brute_IA(const IntBox& box, const Antichain& a,
                unsigned long long cap = 1'000'000);

// One dualization step.  Validates B when `validate` is set and throws
// std::invalid_argument on malformed instances.
DualOutcome dual_step(const DualInstance& inst, bool validate = true);

// Core search: any point of the box outside both the downward closure of
// `maximal` and the upward closure of `minimal`, or nullopt if they cover the
// box.  Deterministic.
std::optional<IntVec> find_uncovered(const IntBox& box, const VecSet& maximal,
                                     const VecSet& minimal);

// Lowers x coordinatewise (ascending index, binary search) to a minimal
// vector not dominated by any member of A.
IntVec minimalize_against(const IntBox& box, const Antichain& a, IntVec x);

struct DualStats {
  unsigned long long splits = 0;
  unsigned long long base_cases = 0;
  unsigned long long depth_cap_hits = 0;
};
DualStats& dual_stats();

}  // namespace monogen
