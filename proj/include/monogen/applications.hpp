#pragma once

#include <set>
#include <vector>

#include "monogen/constraints.hpp"

namespace monogen {

// Rational approximation of the standard normal quantile, absolute error
// bounded by `tol` (default well under the 1e-8 contract).
Rat inv_norm_cdf(const Rat& p, double tol = 1e-10);
// Series-based CDF used by the quantile bisection; exposed for round-trips.
long double std_normal_cdf(long double x);

// prod_{H in edges} sum_{i in H} x_i >= 1 over {0,1}^n; minimal feasible
// vectors are the minimal transversals.
InequalitySystem build_transversal(std::size_t n,
                                   const std::vector<std::set<std::size_t>>& edges);

// (prod_i u_i(x))^{1/m} >= t with u_i(x) = sum_j utilities[i][j] x_j, plus
// per-agent demands u_i(x) >= demands[i].  The 1/m root is cleared by raising
// the threshold to t^m.
InequalitySystem build_nash_welfare(const std::vector<std::vector<Rat>>& utilities,
                                    const std::vector<Rat>& demands, const Rat& t,
                                    const IntVec& caps);

struct ChanceKnapsackSpec {
  std::vector<std::vector<Rat>> means;                 // a^i, each length n
  std::vector<std::vector<std::vector<Rat>>> factors;  // A^i, d_i x n
  std::vector<Rat> alphas;                             // in [1/2, 1)
  std::vector<Rat> caps;                               // t_i
};
// (a^i)^T x + Phi^{-1}(alpha_i) ||A^i x|| <= t_i over {0,1}^n.
InequalitySystem build_chance_knapsack(const ChanceKnapsackSpec& spec);

struct ChanceCoverSpec {
  std::vector<std::vector<Rat>> means;  // a^i
  std::vector<std::vector<Rat>> devs;   // d^i, positive (diagonal D^i)
  std::vector<Rat> alphas;              // in (0, 1/2]
  std::vector<Rat> demands;             // t_i
};
struct ChanceCoverBuild {
  InequalitySystem system;              // >=-sense tabulated constraints
  std::vector<Rat> measured_traction;   // traction of each f_i table
  std::vector<Rat> analytic_traction;   // paper's lower bound per constraint
};
// Tabulates g_i(x) = (a^i)^T x + Phi^{-1}(1-alpha_i) ||D^i x|| on {0,1}^n at
// high working precision, freezes to rationals, and verifies that the
// complement-transformed f_i is monotone with supermodular structure.
ChanceCoverBuild build_chance_cover(const ChanceCoverSpec& spec);

struct QuantumCoverSpec {
  std::vector<SymMat> ops;  // A_1..A_n, 0 <= A_j <= I_d in the Loewner order
};
// sum_j A_j x_j <= T := sum_j A_j - I_d over {0,1}^n; maximal feasible x
// encode minimal covers as their complements.
InequalitySystem build_quantum_cover(const QuantumCoverSpec& spec);

// E' = {j : x_j = 0} for each maximal feasible x.
std::vector<std::set<std::size_t>> decode_quantum_covers(const VecSet& max_feasible);

}  // namespace monogen
