#include "monogen/constraints.hpp"

#include <algorithm>
#include <stdexcept>

namespace monogen {

// ---------------------------------------------------------------------------
// SymMat

SymMat SymMat::identity(std::size_t m) {
  SymMat r(m);
  for (std::size_t i = 0; i < m; ++i) r.at(i, i) = 1;
  return r;
}

SymMat SymMat::diag(const std::vector<Rat>& d) {
  SymMat r(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) r.at(i, i) = d[i];
  return r;
}

void SymMat::set(std::size_t i, std::size_t j, const Rat& v) {
  at(i, j) = v;
  at(j, i) = v;
}

Rat SymMat::trace() const {
  Rat s = 0;
  for (std::size_t i = 0; i < m_; ++i) s += at(i, i);
  return s;
}

bool SymMat::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rat& v) { return sgn(v) == 0; });
}

SymMat SymMat::scaled(const Rat& s) const {
  SymMat r(m_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
  return r;
}

SymMat& SymMat::add_scaled(const SymMat& other, const Rat& s) {
  if (other.m_ != m_) throw std::invalid_argument("SymMat size mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += other.e_[i] * s;
  return *this;
}

Rat SymMat::quad_form(const std::vector<Rat>& u) const {
  if (u.size() != m_) throw std::invalid_argument("SymMat size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = 0; j < m_; ++j) s += at(i, j) * u[i] * u[j];
  return s;
}

namespace {

struct ElimResult {
  bool psd = false;
  std::vector<Rat> pivots;
  std::vector<std::vector<Rat>> w;  // only when track_transform
};

// Symmetric Gaussian elimination with diagonal pivoting.  Congruence
// transforms preserve inertia, so the run decides PSD-ness exactly: a
// negative diagonal entry, or a zero diagonal with a nonzero row, disproves
// it; otherwise the matrix is diagonalized with positive pivots.
ElimResult sym_eliminate(SymMat m, bool track_transform) {
  const std::size_t dim = m.size();
  ElimResult res;
  if (track_transform) {
    res.w.assign(dim, std::vector<Rat>(dim, Rat(0)));
    for (std::size_t i = 0; i < dim; ++i) res.w[i][i] = 1;
  }
  std::size_t k = 0;
  while (k < dim) {
    std::size_t pivot = dim;
    for (std::size_t p = k; p < dim; ++p) {
      int s = sgn(m.at(p, p));
      if (s < 0) return res;  // not PSD
      if (s > 0 && pivot == dim) pivot = p;
    }
    if (pivot == dim) {
      // zero diagonal tail: PSD iff the whole remaining block vanishes
      for (std::size_t i = k; i < dim; ++i)
        for (std::size_t j = k; j < dim; ++j)
          if (sgn(m.at(i, j)) != 0) return res;
      break;
    }
    if (pivot != k) {
      for (std::size_t j = 0; j < dim; ++j) std::swap(m.at(pivot, j), m.at(k, j));
      for (std::size_t i = 0; i < dim; ++i) std::swap(m.at(i, pivot), m.at(i, k));
      if (track_transform) std::swap(res.w[pivot], res.w[k]);
    }
    const Rat d = m.at(k, k);
    std::vector<Rat> col(dim, Rat(0));
    for (std::size_t i = k + 1; i < dim; ++i) col[i] = m.at(i, k);
    // Schur complement: M' = E M E^T with E clearing column k below the pivot
    for (std::size_t i = k + 1; i < dim; ++i) {
      if (sgn(col[i]) == 0) continue;
      Rat f = col[i] / d;
      for (std::size_t j = k + 1; j < dim; ++j) m.at(i, j) -= f * col[j];
      m.at(i, k) = 0;
      m.at(k, i) = 0;
      if (track_transform)
        for (std::size_t j = 0; j < dim; ++j) res.w[i][j] -= f * res.w[k][j];
    }
    res.pivots.push_back(d);
    ++k;
  }
  res.psd = true;
  return res;
}

}  // namespace

bool psd_check(const SymMat& a) { return sym_eliminate(a, false).psd; }

std::size_t sym_rank(const SymMat& a) {
  ElimResult r = sym_eliminate(a, false);
  if (!r.psd) throw std::invalid_argument("sym_rank: matrix is not PSD");
  return r.pivots.size();
}

SymDiagonalization sym_diagonalize(const SymMat& a) {
  ElimResult r = sym_eliminate(a, true);
  if (!r.psd) throw std::invalid_argument("sym_diagonalize: matrix is not PSD");
  return {std::move(r.w), std::move(r.pivots)};
}

// ---------------------------------------------------------------------------
// Class plumbing

unsigned PolynomialIneq::max_degree() const {
  unsigned d = 0;
  for (const auto& term : terms)
    for (const auto& [j, e] : term.exps) d = std::max(d, e);
  return d;
}

std::size_t SupermodularTableIneq::index(const IntVec& x) const {
  if (x.size() != shape.size())
    throw std::invalid_argument("table dimension mismatch");
  std::size_t idx = 0;
  for (std::size_t j = 0; j < shape.size(); ++j) {
    if (x[j] < 0 || x[j] > shape[j])
      throw std::out_of_range("table lookup outside box");
    idx = idx * (mpz_get_ui(Int(shape[j] + 1).get_mpz_t())) +
          mpz_get_ui(x[j].get_mpz_t());
  }
  return idx;
}

const Rat& SupermodularTableIneq::value(const IntVec& x) const {
  return values.at(index(x));
}

const char* class_name(const Constraint& c) {
  static const char* names[] = {"linear",    "separable",         "polynomial",
                                "product_affine", "supermodular_table", "soc",
                                "psd"};
  return names[c.index()];
}

std::size_t constraint_dim(const Constraint& c) {
  return std::visit(
      [](const auto& k) -> std::size_t {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, LinearIneq>) return k.a.size();
        else if constexpr (std::is_same_v<T, SeparableIneq>) return k.tables.size();
        else if constexpr (std::is_same_v<T, PolynomialIneq>) return k.n;
        else if constexpr (std::is_same_v<T, ProductAffineIneq>)
          return k.factors.empty() ? 0 : k.factors.front().a.size();
        else if constexpr (std::is_same_v<T, SupermodularTableIneq>) return k.shape.size();
        else if constexpr (std::is_same_v<T, SocIneq>) return k.b.size();
        else return k.mats.size();
      },
      c);
}

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

void validate_constraint(const Constraint& c, bool ge_sense) {
  std::visit(
      [&](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, LinearIneq>) {
          for (const Rat& v : k.a) require(sgn(v) >= 0, "linear: negative coefficient");
          require(sgn(k.t) >= 0, "linear: negative threshold");
        } else if constexpr (std::is_same_v<T, SeparableIneq>) {
          for (const auto& tab : k.tables) {
            require(!tab.empty(), "separable: empty table");
            require(sgn(tab.front()) >= 0, "separable: negative value");
            for (std::size_t v = 1; v < tab.size(); ++v)
              require(cmp(tab[v - 1], tab[v]) <= 0, "separable: table not nondecreasing");
          }
        } else if constexpr (std::is_same_v<T, PolynomialIneq>) {
          for (const auto& term : k.terms) {
            require(sgn(term.coef) > 0, "polynomial: nonpositive coefficient");
            require(!term.exps.empty(), "polynomial: constant term");
            for (const auto& [j, e] : term.exps) {
              require(j < k.n, "polynomial: variable index out of range");
              require(e >= 1, "polynomial: zero exponent");
            }
          }
        } else if constexpr (std::is_same_v<T, ProductAffineIneq>) {
          require(!k.factors.empty(), "product_affine: no factors");
          for (const auto& p : k.factors) {
            require(p.a.size() == k.factors.front().a.size(),
                    "product_affine: inconsistent dimensions");
            require(sgn(p.a0) >= 0, "product_affine: negative constant");
            for (const Rat& v : p.a) require(sgn(v) >= 0, "product_affine: negative coefficient");
          }
        } else if constexpr (std::is_same_v<T, SupermodularTableIneq>) {
          Int vol = 1;
          for (const Int& cj : k.shape) {
            require(cj >= 0, "supermodular_table: negative shape");
            vol *= cj + 1;
          }
          require(mpz_cmp_ui(vol.get_mpz_t(), k.values.size()) == 0,
                  "supermodular_table: value count does not match box");
          IntBox box(k.shape);
          TableFn f = [&k](const IntVec& x) { return k.value(x); };
          // monotone nondecreasing along every unit step
          IntVec x = zero_vec(k.shape.size());
          do {
            require(sgn(k.value(x)) >= 0, "supermodular_table: negative value");
            for (std::size_t j = 0; j < k.shape.size(); ++j) {
              if (x[j] >= k.shape[j]) continue;
              require(cmp(k.value(x), k.value(unit_step(x, j, 1))) <= 0,
                      "supermodular_table: not monotone");
            }
          } while (next_point(x, k.shape));
          if (!ge_sense)
            require(check_supermodular(f, box), "supermodular_table: not supermodular");
        } else if constexpr (std::is_same_v<T, SocIneq>) {
          require(sgn(k.t) >= 0, "soc: negative threshold");
          for (const Rat& v : k.b) require(sgn(v) >= 0, "soc: negative coefficient");
          for (const auto& row : k.A) {
            require(row.size() == k.b.size(), "soc: row length mismatch");
            for (const Rat& v : row) require(sgn(v) >= 0, "soc: negative entry");
          }
        } else if constexpr (std::is_same_v<T, PsdIneq>) {
          require(psd_check(k.T), "psd: T is not positive semidefinite");
          for (const SymMat& a : k.mats) {
            require(a.size() == k.T.size(), "psd: matrix size mismatch");
            require(psd_check(a), "psd: A^j is not positive semidefinite");
          }
        }
      },
      c);
}

// ---------------------------------------------------------------------------
// Evaluation

Rat evaluate(const Constraint& c, const IntVec& x) {
  return std::visit(
      [&](const auto& k) -> Rat {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, LinearIneq>) {
          if (x.size() != k.a.size()) throw std::invalid_argument("dimension mismatch");
          Rat s = 0;
          for (std::size_t j = 0; j < x.size(); ++j) s += k.a[j] * Rat(x[j]);
          return s;
        } else if constexpr (std::is_same_v<T, SeparableIneq>) {
          if (x.size() != k.tables.size()) throw std::invalid_argument("dimension mismatch");
          Rat s = 0;
          for (std::size_t j = 0; j < x.size(); ++j) {
            unsigned long v = mpz_get_ui(x[j].get_mpz_t());
            if (x[j] < 0 || v >= k.tables[j].size())
              throw std::out_of_range("separable: argument outside table");
            s += k.tables[j][v];
          }
          return s;
        } else if constexpr (std::is_same_v<T, PolynomialIneq>) {
          if (x.size() != k.n) throw std::invalid_argument("dimension mismatch");
          Rat s = 0;
          for (const auto& term : k.terms) {
            Int prod = 1;
            for (const auto& [j, e] : term.exps) {
              Int p;
              mpz_pow_ui(p.get_mpz_t(), x[j].get_mpz_t(), e);
              prod *= p;
            }
            s += term.coef * Rat(prod);
          }
          return s;
        } else if constexpr (std::is_same_v<T, ProductAffineIneq>) {
          Rat prod = 1;
          for (const auto& p : k.factors) {
            if (x.size() != p.a.size()) throw std::invalid_argument("dimension mismatch");
            Rat s = p.a0;
            for (std::size_t j = 0; j < x.size(); ++j) s += p.a[j] * Rat(x[j]);
            prod *= s;
          }
          return prod;
        } else if constexpr (std::is_same_v<T, SupermodularTableIneq>) {
          return k.value(x);
        } else {
          throw std::logic_error(
              "evaluate: class exposes feasibility comparisons only");
        }
      },
      c);
}

LinSqrtVal eval_lin_sqrt(const Constraint& c, const IntVec& x) {
  if (const auto* soc = std::get_if<SocIneq>(&c)) {
    if (x.size() != soc->b.size()) throw std::invalid_argument("dimension mismatch");
    Rat u = 0;
    for (std::size_t j = 0; j < x.size(); ++j) u += soc->b[j] * Rat(x[j]);
    Rat v = 0;
    for (const auto& row : soc->A) {
      Rat s = 0;
      for (std::size_t j = 0; j < x.size(); ++j) s += row[j] * Rat(x[j]);
      v += s * s;
    }
    return {u, v};
  }
  if (std::holds_alternative<PsdIneq>(c))
    throw std::logic_error("eval_lin_sqrt: psd constraints are order-valued");
  return {evaluate(c, x), Rat(0)};
}

int compare(const LinSqrtVal& a, const LinSqrtVal& b) {
  return compare_lin_sqrt(a.u, a.v, b.u, b.v);
}

bool holds_le(const Constraint& c, const IntVec& x) {
  if (const auto* psd = std::get_if<PsdIneq>(&c)) {
    SymMat slack = psd->T;
    for (std::size_t j = 0; j < psd->mats.size(); ++j)
      if (sgn(x[j]) != 0) slack.add_scaled(psd->mats[j], -Rat(x[j]));
    return psd_check(slack);
  }
  if (const auto* soc = std::get_if<SocIneq>(&c)) {
    LinSqrtVal v = eval_lin_sqrt(c, x);
    Rat margin = soc->t - v.u;
    return sgn(margin) >= 0 && cmp(v.v, margin * margin) <= 0;
  }
  const Rat t = std::visit(
      [](const auto& k) -> Rat {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, PsdIneq>) return Rat(0);
        else return k.t;
      },
      c);
  return cmp(evaluate(c, x), t) <= 0;
}

bool holds_ge(const Constraint& c, const IntVec& x) {
  if (const auto* psd = std::get_if<PsdIneq>(&c)) {
    SymMat slack = psd->T.scaled(-1);
    for (std::size_t j = 0; j < psd->mats.size(); ++j)
      if (sgn(x[j]) != 0) slack.add_scaled(psd->mats[j], Rat(x[j]));
    return psd_check(slack);
  }
  if (const auto* soc = std::get_if<SocIneq>(&c)) {
    LinSqrtVal v = eval_lin_sqrt(c, x);
    return compare_lin_sqrt(v.u, v.v, soc->t, Rat(0)) >= 0;
  }
  const Rat t = std::visit(
      [](const auto& k) -> Rat {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, PsdIneq>) return Rat(0);
        else return k.t;
      },
      c);
  return cmp(evaluate(c, x), t) >= 0;
}

bool is_feasible(const InequalitySystem& sys, const IntVec& x) {
  for (const Constraint& c : sys.constraints) {
    bool ok = sys.mode == Mode::MaxFeasible ? holds_le(c, x) : holds_ge(c, x);
    if (!ok) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Box derivation

namespace {

// Per-constraint cap on variable j, when one is derivable.
std::optional<Int> constraint_cap(const Constraint& c, std::size_t j, Mode mode) {
  return std::visit(
      [&](const auto& k) -> std::optional<Int> {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, LinearIneq>) {
          if (sgn(k.a[j]) == 0) return std::nullopt;
          Int cap = floor_rat(k.t / k.a[j]);
          // minimal feasible solutions of a >=-inequality sit one step higher
          if (mode == Mode::MinFeasible) cap += 1;
          return cap;
        } else if constexpr (std::is_same_v<T, SeparableIneq>) {
          return Int(k.tables[j].size() - 1);
        } else if constexpr (std::is_same_v<T, PolynomialIneq>) {
          std::optional<Rat> min_coef;
          for (const auto& term : k.terms)
            if (term.exps.count(j) && (!min_coef || cmp(term.coef, *min_coef) < 0))
              min_coef = term.coef;
          if (!min_coef) return std::nullopt;
          return floor_rat(k.t / *min_coef);
        } else if constexpr (std::is_same_v<T, ProductAffineIneq>) {
          return std::nullopt;  // needs user caps in >= sense
        } else if constexpr (std::is_same_v<T, SupermodularTableIneq>) {
          return k.shape[j];
        } else if constexpr (std::is_same_v<T, SocIneq>) {
          if (mode == Mode::MinFeasible) return std::nullopt;
          Rat m = k.b[j];
          for (const auto& row : k.A) m = std::max(m, row[j]);
          if (sgn(m) == 0) return std::nullopt;
          return floor_rat(k.t / m);
        } else {  // PsdIneq
          if (mode == Mode::MinFeasible) return std::nullopt;
          Rat tr = k.mats[j].trace();
          if (sgn(tr) == 0) return std::nullopt;
          return floor_rat(k.T.trace() / tr);
        }
      },
      c);
}

}  // namespace

IntBox derive_box(const InequalitySystem& sys, const std::optional<IntVec>& user_caps) {
  std::size_t n = 0;
  for (const Constraint& c : sys.constraints) n = std::max(n, constraint_dim(c));
  if (user_caps) n = std::max(n, user_caps->size());
  IntVec c(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::optional<Int> cap;
    if (user_caps && j < user_caps->size()) cap = (*user_caps)[j];
    for (const Constraint& k : sys.constraints) {
      if (j >= constraint_dim(k)) continue;
      auto kc = constraint_cap(k, j, sys.mode);
      if (kc && (!cap || *kc < *cap)) cap = *kc;
    }
    if (!cap)
      throw std::domain_error("variable " + std::to_string(j + 1) +
                              " is unbounded: no constraint caps it and no user cap given");
    c[j] = std::max(Int(0), *cap);
  }
  return IntBox(std::move(c));
}

// ---------------------------------------------------------------------------
// Structural checkers

bool check_supermodular(const TableFn& f, const IntBox& box, unsigned long long cap) {
  const unsigned long long vol = box.volume(cap);
  const std::size_t n = box.dim();
  std::vector<Rat> val(vol);
  for (unsigned long long i = 0; i < vol; ++i) val[i] = f(decode_index(i, box.c));
  std::vector<IntVec> pts(vol);
  for (unsigned long long i = 0; i < vol; ++i) pts[i] = decode_index(i, box.c);
  auto rank = [&](const IntVec& x) {
    unsigned long long idx = 0;
    for (std::size_t j = 0; j < n; ++j)
      idx = idx * mpz_get_ui(Int(box.c[j] + 1).get_mpz_t()) + mpz_get_ui(x[j].get_mpz_t());
    return idx;
  };
  // unit-step differences must be monotone over comparable pairs sharing x_j
  for (unsigned long long a = 0; a < vol; ++a) {
    for (unsigned long long b = 0; b < vol; ++b) {
      if (a == b || !dominates(pts[b], pts[a])) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (pts[a][j] != pts[b][j] || pts[a][j] >= box.c[j]) continue;
        Rat da = val[rank(unit_step(pts[a], j, 1))] - val[a];
        Rat db = val[rank(unit_step(pts[b], j, 1))] - val[b];
        if (cmp(da, db) > 0) return false;
      }
    }
  }
  return true;
}

bool check_2monotonic(const OrderedFn& f, const IntBox& box,
                      const std::vector<std::size_t>& sigma, unsigned long long cap) {
  const std::size_t n = box.dim();
  if (sigma.size() != n) throw std::invalid_argument("permutation size mismatch");
  box.volume(cap);
  IntVec x = zero_vec(n);
  do {
    LinSqrtVal fx = f(x);
    for (std::size_t k = 0; k < n; ++k) {
      if (x[sigma[k]] >= box.c[sigma[k]]) continue;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (sgn(x[sigma[j]]) == 0) continue;
        IntVec y = x;
        ++y[sigma[k]];
        --y[sigma[j]];
        if (compare(f(y), fx) < 0) return false;
      }
    }
  } while (next_point(x, box.c));
  return true;
}

std::optional<Rat> traction(const TableFn& f, const IntBox& box, unsigned long long cap) {
  box.volume(cap);
  std::optional<Rat> best;
  IntVec x = zero_vec(box.dim());
  do {
    Rat fx = f(x);
    for (std::size_t j = 0; j < box.dim(); ++j) {
      if (x[j] >= box.c[j]) continue;
      Rat d = f(unit_step(x, j, 1)) - fx;
      if (sgn(d) > 0 && (!best || cmp(d, *best) < 0)) best = d;
    }
  } while (next_point(x, box.c));
  return best;
}

OrderedFn ordered_fn_of(const Constraint& c) {
  return [c](const IntVec& x) { return eval_lin_sqrt(c, x); };
}

TableFn table_fn_of(const Constraint& c) {
  if (std::holds_alternative<SocIneq>(c) || std::holds_alternative<PsdIneq>(c))
    throw std::logic_error("table_fn_of: class has no exact rational values");
  return [c](const IntVec& x) { return evaluate(c, x); };
}

// ---------------------------------------------------------------------------
// SOC / PSD specifics

std::vector<Rat> soc_weight_vector(const SocIneq& c, const std::vector<Rat>& u) {
  if (u.size() != c.rows()) throw std::invalid_argument("soc_weight_vector: bad u length");
  Rat norm2 = 0;
  for (const Rat& v : u) {
    if (sgn(v) < 0) throw std::domain_error("soc_weight_vector: u has a negative entry");
    norm2 += v * v;
  }
  if (cmp(norm2, Rat(1)) > 0)
    throw std::domain_error("soc_weight_vector: u outside the unit ball");
  std::vector<Rat> w = c.b;
  for (std::size_t k = 0; k < c.rows(); ++k)
    for (std::size_t j = 0; j < w.size(); ++j) w[j] += c.A[k][j] * u[k];
  return w;
}

namespace {

SymMat congruence(const std::vector<std::vector<Rat>>& w, const SymMat& a) {
  const std::size_t m = a.size();
  // B = W A W^T
  std::vector<std::vector<Rat>> wa(m, std::vector<Rat>(m, Rat(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      if (sgn(w[i][k]) == 0) continue;
      for (std::size_t j = 0; j < m; ++j) wa[i][j] += w[i][k] * a.at(k, j);
    }
  SymMat b(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Rat s = 0;
      for (std::size_t k = 0; k < m; ++k) s += wa[i][k] * w[j][k];
      b.set(i, j, s);
    }
  return b;
}

}  // namespace

PsdReduction psd_reduce(const PsdIneq& c) {
  if (!psd_check(c.T)) throw std::invalid_argument("psd_reduce: T is not PSD");
  SymDiagonalization diag = sym_diagonalize(c.T);
  const std::size_t d = diag.pivots.size();
  const std::size_t m = c.T.size();

  // normalize pivots to 1 where the square root is rational
  std::vector<Rat> scale(d, Rat(1));
  bool all_unit = true;
  for (std::size_t k = 0; k < d; ++k) {
    if (auto r = exact_sqrt(diag.pivots[k])) {
      scale[k] = 1 / *r;
    } else {
      all_unit = false;
    }
  }
  if (all_unit) {
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t j = 0; j < m; ++j) diag.w[k][j] *= scale[k];
      diag.pivots[k] = 1;
    }
  }

  PsdReduction out;
  out.reduced.T = SymMat::diag(diag.pivots);
  for (std::size_t j = 0; j < c.mats.size(); ++j) {
    SymMat b = congruence(diag.w, c.mats[j]);
    bool forced_zero = false;
    for (std::size_t k = d; k < m; ++k)
      if (sgn(b.at(k, k)) > 0) forced_zero = true;
    if (forced_zero) {
      out.dropped.push_back(j);
      continue;
    }
    // PSD with a zero diagonal tail: the tail rows vanish
    SymMat cj(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = i; k < d; ++k) cj.set(i, k, b.at(i, k));
    out.kept.push_back(j);
    out.reduced.mats.push_back(std::move(cj));
  }
  return out;
}

}  // namespace monogen
