#pragma once

#include <functional>
#include <optional>

#include "monogen/constraints.hpp"
#include "monogen/dualization.hpp"
#include "monogen/lattice.hpp"

namespace monogen {

enum class EmissionTag { MaxFeasible, MinInfeasible, MinFeasible };

// Monotone feasibility predicate over a box (downward closed).
struct FeasOracle {
  IntBox box;
  std::function<bool(const IntVec&)> feasible;
};

// The <=-sense system as an oracle.  Requires Mode::MaxFeasible.
FeasOracle oracle_of(const InequalitySystem& sys);

// Complement view of a >=-sense system: y is wrapped-feasible iff c - y
// satisfies every >= constraint.  Maximal feasible points of the wrapped
// oracle are the complements of the system's minimal feasible points.
FeasOracle reflect(const InequalitySystem& ge_sys);

struct GenerationState {
  Antichain confirmed_max{Orientation::MaximalKept};   // subset of F
  Antichain confirmed_min{Orientation::MinimalKept};   // subset of I(F)
  unsigned long long oracle_calls = 0;
  unsigned long long dual_steps = 0;
};

// Greedy coordinate sweep with binary search; requires feasible(x).
IntVec maximalize(const FeasOracle& o, IntVec x, unsigned long long* calls = nullptr);
// Dual sweep; requires !feasible(x).
IntVec minimalize(const FeasOracle& o, IntVec x, unsigned long long* calls = nullptr);

// Joint enumeration of F and I(F) by repeated dualization.  `sink` receives
// each element in discovery order and may return false to stop early.  The
// returned state holds the families accumulated so far (complete when not
// stopped early).
using EmissionSink = std::function<bool(EmissionTag, const IntVec&)>;
GenerationState joint_generate(const FeasOracle& o, const EmissionSink& sink,
                               std::optional<unsigned long long> limit = std::nullopt,
                               const VecSet& seed_max = {});

// System-level wrapper: dispatches on mode and, for MinFeasible, maps wrapped
// maximal vectors back through the complement (tag MinFeasible).
GenerationState joint_generate(const InequalitySystem& sys, const EmissionSink& sink,
                               std::optional<unsigned long long> limit = std::nullopt);

struct GenStepResult {
  std::optional<IntVec> new_max;       // empty: Y = F confirmed
  unsigned long long discarded = 0;    // |I(Y) n I(F)| emissions thrown away
};

// One GEN(Y) round: either a member of F \ Y or confirmation.
// Every seed is re-verified as maximal feasible.
GenStepResult gen_step(const InequalitySystem& sys, const VecSet& y);

}  // namespace monogen
