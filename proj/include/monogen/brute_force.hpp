#pragma once

#include "monogen/generation.hpp"
#include "monogen/lattice.hpp"

namespace monogen {

struct BruteResult {
  VecSet max_feasible;   // F: maximal feasible vectors
  VecSet min_infeasible; // I(F): minimal infeasible / out-of-box boundary
};

// Full box scan against the oracle.  `parallel` selects the OpenMP kernel;
// the serial path is the reference implementation.  Throws std::length_error
// past `cap` points.
BruteResult enumerate_all(const FeasOracle& o, bool parallel = true,
                          unsigned long long cap = kScanCap);

// Mode-aware wrapper over the system's own coordinates.
struct SystemBrute {
  VecSet primary;    // MaxFeasible: F.  MinFeasible: minimal feasible vectors.
  VecSet secondary;  // MaxFeasible: I(F).  MinFeasible: empty.
};
SystemBrute enumerate_system(const InequalitySystem& sys, bool parallel = true,
                             unsigned long long cap = kScanCap);

}  // namespace monogen
