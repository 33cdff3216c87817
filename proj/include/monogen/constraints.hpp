#pragma once

#include <functional>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "monogen/lattice.hpp"
#include "monogen/rational.hpp"

namespace monogen {

inline constexpr unsigned long long kScanCap = 1'000'000;      // single-pass scans
inline constexpr unsigned long long kPairScanCap = 4'096;      // all-pairs checks

// ---------------------------------------------------------------------------
// Exact symmetric matrices

class SymMat {
 public:
  SymMat() : m_(0) {}
  explicit SymMat(std::size_t m) : m_(m), e_(m * m, Rat(0)) {}
  static SymMat identity(std::size_t m);
  static SymMat diag(const std::vector<Rat>& d);

  std::size_t size() const { return m_; }
  Rat& at(std::size_t i, std::size_t j) { return e_[i * m_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return e_[i * m_ + j]; }
  void set(std::size_t i, std::size_t j, const Rat& v);  // keeps symmetry

  Rat trace() const;
  bool is_zero() const;
  SymMat scaled(const Rat& s) const;
  SymMat& add_scaled(const SymMat& other, const Rat& s);
  // u^T (this) u
  Rat quad_form(const std::vector<Rat>& u) const;

 private:
  std::size_t m_;
  std::vector<Rat> e_;
};

// Exact PSD test via symmetric elimination with diagonal pivoting.
bool psd_check(const SymMat& a);
std::size_t sym_rank(const SymMat& a);  // requires PSD input

// Invertible rational W with W a W^T = diag(pivots, 0,...,0); pivots > 0.
// Only defined for PSD input (throws otherwise).
struct SymDiagonalization {
  std::vector<std::vector<Rat>> w;  // m x m, invertible
  std::vector<Rat> pivots;          // length rank, all positive
};
SymDiagonalization sym_diagonalize(const SymMat& a);

// ---------------------------------------------------------------------------
// The seven monotone inequality classes

struct LinearIneq {
  std::vector<Rat> a;  // nonnegative
  Rat t;
};

struct SeparableIneq {
  // tables[j][v] = f_j(v) for v in {0,...,c_j}; nondecreasing, nonnegative.
  std::vector<std::vector<Rat>> tables;
  Rat t;
};

struct PolyTerm {
  Rat coef;                            // > 0
  std::map<std::size_t, unsigned> exps;  // j -> degree >= 1
};

struct PolynomialIneq {
  std::size_t n = 0;
  std::vector<PolyTerm> terms;
  Rat t;

  std::size_t num_terms() const { return terms.size(); }
  unsigned max_degree() const;
};

struct AffineForm {
  std::vector<Rat> a;  // nonnegative
  Rat a0;              // nonnegative
};

struct ProductAffineIneq {
  std::vector<AffineForm> factors;  // nonempty
  Rat t;
};

// Tabulated function over its own box; values monotone nondecreasing.
// Supermodularity (the Prop.-1 difference criterion) is validated when
// `require_supermodular` is set, which is the default for <=-mode systems.
struct SupermodularTableIneq {
  IntVec shape;              // upper corner of the table's box
  std::vector<Rat> values;   // row-major over the box
  Rat t;

  std::size_t index(const IntVec& x) const;
  const Rat& value(const IntVec& x) const;
  Rat range() const { return values.empty() ? Rat(0) : values.back(); }  // f(c)
};

struct SocIneq {
  std::vector<std::vector<Rat>> A;  // d x n, nonnegative
  std::vector<Rat> b;               // length n, nonnegative
  Rat t;

  std::size_t rows() const { return A.size(); }
};

struct PsdIneq {
  std::vector<SymMat> mats;  // A^1..A^n, each PSD
  SymMat T;                  // PSD
};

using Constraint = std::variant<LinearIneq, SeparableIneq, PolynomialIneq,
                                ProductAffineIneq, SupermodularTableIneq,
                                SocIneq, PsdIneq>;

const char* class_name(const Constraint& c);
std::size_t constraint_dim(const Constraint& c);

// Validates class invariants (nonnegativity, monotonicity, PSD-ness, ...).
// `ge_sense` relaxes the supermodularity requirement on tables, which only
// backs the <=-mode theory.
void validate_constraint(const Constraint& c, bool ge_sense);

enum class Mode { MaxFeasible, MinFeasible };

struct InequalitySystem {
  IntBox box;
  std::vector<Constraint> constraints;
  Mode mode = Mode::MaxFeasible;

  std::size_t dim() const { return box.dim(); }
};

// ---------------------------------------------------------------------------
// Evaluation

// Exact rational value; throws for SOC and PSD (irrational / order-valued).
Rat evaluate(const Constraint& c, const IntVec& x);

// Value represented as u + sqrt(v); exact for every class except PSD.
struct LinSqrtVal {
  Rat u;
  Rat v;  // >= 0
};
LinSqrtVal eval_lin_sqrt(const Constraint& c, const IntVec& x);
int compare(const LinSqrtVal& a, const LinSqrtVal& b);

// Single constraint against its threshold in the given sense.
bool holds_le(const Constraint& c, const IntVec& x);
bool holds_ge(const Constraint& c, const IntVec& x);

bool is_feasible(const InequalitySystem& sys, const IntVec& x);

// ---------------------------------------------------------------------------
// Box derivation

// Throws std::domain_error naming j when some variable is unbounded by every
// constraint and no user cap is given.
IntBox derive_box(const InequalitySystem& sys,
                  const std::optional<IntVec>& user_caps = std::nullopt);

// ---------------------------------------------------------------------------
// Structural checkers

using TableFn = std::function<Rat(const IntVec&)>;
using OrderedFn = std::function<LinSqrtVal(const IntVec&)>;

// Prop.-1 criterion: every unit-step difference is monotone in x.
bool check_supermodular(const TableFn& f, const IntBox& box,
                        unsigned long long cap = kPairScanCap);

// f(x + 1^{sigma(k)} - 1^{sigma(j)}) >= f(x) for all applicable x, k < j.
bool check_2monotonic(const OrderedFn& f, const IntBox& box,
                      const std::vector<std::size_t>& sigma,
                      unsigned long long cap = kScanCap);

// Minimum positive unit-step increase; nullopt when f is constant.
std::optional<Rat> traction(const TableFn& f, const IntBox& box,
                            unsigned long long cap = kScanCap);

OrderedFn ordered_fn_of(const Constraint& c);
TableFn table_fn_of(const Constraint& c);  // rational classes only

// ---------------------------------------------------------------------------
// SOC / PSD specifics

// w^u = A^T u + b; requires u >= 0 with ||u|| <= 1.
std::vector<Rat> soc_weight_vector(const SocIneq& c, const std::vector<Rat>& u);

struct PsdReduction {
  PsdIneq reduced;                  // over the kept variables
  std::vector<std::size_t> kept;    // indices into the original variable list
  std::vector<std::size_t> dropped; // variables forced to zero
};

// Rank reduction of sum A^j x_j <= T to a d x d system, d = rank(T).
// The reduced right-hand side is I_d whenever all elimination pivots have
// rational square roots, and a positive diagonal matrix otherwise.
PsdReduction psd_reduce(const PsdIneq& c);

}  // namespace monogen
