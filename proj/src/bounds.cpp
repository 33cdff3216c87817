#include "monogen/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "monogen/brute_force.hpp"
#include "monogen/generation.hpp"

namespace monogen {

namespace {

std::string rat_str(const Rat& q) { return to_string(q); }

Int pow2(unsigned e) {
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  return p;
}

Int binom(const Int& m, unsigned i) {
  if (m < 0) throw std::invalid_argument("binom: negative m");
  Int r;
  mpz_bin_ui(r.get_mpz_t(), m.get_mpz_t(), i);
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Mobius machinery

Rat MobiusTable::reconstruct(const IntVec& x) const {
  Rat s = 0;
  for (const auto& [y, v] : fhat)
    if (dominates(x, y)) s += v;
  return s;
}

MobiusTable mobius_transform(const TableFn& f, const IntBox& box,
                             unsigned long long cap) {
  box.volume(cap);
  MobiusTable out;
  out.box = box;
  const std::size_t n = box.dim();
  IntVec x = zero_vec(n);
  do {
    std::vector<std::size_t> supp;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(x[j]) > 0) supp.push_back(j);
    Rat v = 0;
    // fhat(x) = sum over S subseteq supp(x) of (-1)^|S| f(x - 1^S)
    for (std::size_t mask = 0; mask < (std::size_t{1} << supp.size()); ++mask) {
      IntVec y = x;
      int parity = 1;
      for (std::size_t k = 0; k < supp.size(); ++k) {
        if (mask >> k & 1) {
          --y[supp[k]];
          parity = -parity;
        }
      }
      v += Rat(parity) * f(y);
    }
    out.fhat.emplace(x, std::move(v));
  } while (next_point(x, box.c));
  return out;
}

// ---------------------------------------------------------------------------
// Arrangement cell counts

Int phi_cells(unsigned d, const Int& m) {
  Int s = 0;
  for (unsigned i = 0; i <= d; ++i) s += binom(m, i);
  return s;
}

Int psi_cells(unsigned d, unsigned D, const Int& m) {
  Int twoD;
  mpz_ui_pow_ui(twoD.get_mpz_t(), 2 * D, d);
  Int s = 0;
  for (unsigned i = 0; i <= d; ++i) s += pow2(i) * binom(4 * m + 1, i);
  return 2 * twoD * s;
}

// ---------------------------------------------------------------------------
// Bit length

Int bit_length_L(const InequalitySystem& sys) {
  Int total = 0;
  auto add = [&](const Rat& q) { total += static_cast<unsigned long>(bit_length(q)); };
  for (const Int& cj : sys.box.c) total += static_cast<unsigned long>(bit_length(cj));
  for (const Constraint& c : sys.constraints) {
    std::visit(
        [&](const auto& k) {
          using T = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<T, LinearIneq>) {
            for (const Rat& v : k.a) add(v);
            add(k.t);
          } else if constexpr (std::is_same_v<T, SeparableIneq>) {
            for (const auto& tab : k.tables)
              for (const Rat& v : tab) add(v);
            add(k.t);
          } else if constexpr (std::is_same_v<T, PolynomialIneq>) {
            for (const auto& term : k.terms) {
              add(term.coef);
              for (const auto& [j, e] : term.exps) {
                (void)j;
                total += static_cast<unsigned long>(bit_length(Int(e)));
              }
            }
            add(k.t);
          } else if constexpr (std::is_same_v<T, ProductAffineIneq>) {
            for (const auto& p : k.factors) {
              for (const Rat& v : p.a) add(v);
              add(p.a0);
            }
            add(k.t);
          } else if constexpr (std::is_same_v<T, SupermodularTableIneq>) {
            for (const Rat& v : k.values) add(v);
            add(k.t);
          } else if constexpr (std::is_same_v<T, SocIneq>) {
            for (const auto& row : k.A)
              for (const Rat& v : row) add(v);
            for (const Rat& v : k.b) add(v);
            add(k.t);
          } else {  // PsdIneq
            for (const SymMat& a : k.mats)
              for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = i; j < a.size(); ++j) add(a.at(i, j));
            for (std::size_t i = 0; i < k.T.size(); ++i)
              for (std::size_t j = i; j < k.T.size(); ++j) add(k.T.at(i, j));
          }
        },
        c);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Bound rows

namespace {

struct KindValue {
  std::string formula;
  Rat value;
  std::map<std::string, std::string> params;
};

bool integer_valued(const SeparableIneq& k) {
  for (const auto& tab : k.tables)
    for (const Rat& v : tab)
      if (!is_integer(v)) return false;
  return true;
}

bool integer_valued(const PolynomialIneq& k) {
  for (const auto& term : k.terms)
    if (!is_integer(term.coef)) return false;
  return true;
}

// Concrete single-inequality bound formulas; union rule sums them.
std::vector<KindValue> concrete_kinds(const Constraint& c, const IntBox& box,
                                      std::size_t ysz) {
  const std::size_t n = box.dim();
  const Rat y(static_cast<unsigned long>(ysz));
  std::vector<KindValue> out;
  std::visit(
      [&](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, LinearIneq> ||
                      std::is_same_v<T, SeparableIneq>) {
          // (B2): holds for linear and single-variable monotone sums
          out.push_back({"rn|Y|", Rat(static_cast<unsigned long>(n)) * y,
                         {{"n", std::to_string(n)}}});
        }
        if constexpr (std::is_same_v<T, SeparableIneq>) {
          if (integer_valued(k)) {
            Rat range = 0;
            for (const auto& tab : k.tables) range += tab.back();
            Rat slack = range - Rat(floor_rat(k.t));
            if (sgn(slack) < 0) slack = 0;
            out.push_back({"(R-t)|Y|", slack * y,
                           {{"R", rat_str(range)}, {"t", rat_str(k.t)}}});
          }
        }
        if constexpr (std::is_same_v<T, PolynomialIneq>) {
          unsigned d = 0;  // max per-variable degree
          std::size_t p = 1;  // max distinct variables per term
          for (const auto& term : k.terms) {
            p = std::max(p, term.exps.size());
            for (const auto& [j, e] : term.exps) {
              (void)j;
              d = std::max(d, e);
            }
          }
          const Rat s(static_cast<unsigned long>(k.num_terms()));
          // (B3): s terms, each a product of at most p monotone univariates
          Rat pw = 1;
          for (std::size_t i = 0; i < p; ++i) pw *= 2 * y + 1;
          out.push_back({"sp(2|Y|+1)^p", s * Rat(static_cast<unsigned long>(p)) * pw,
                         {{"s", rat_str(s)}, {"p", std::to_string(p)}}});
          if (integer_valued(k)) {
            // rho = max f_j^H(x+1)/f_j^H(x) over interior x; monomials peak at
            // x = 1, giving 2^degree
            Rat rho = 1;
            for (const auto& term : k.terms)
              for (const auto& [j, e] : term.exps)
                if (box.c[j] >= 2) rho = std::max(rho, Rat(pow2(e)));
            const Rat h(static_cast<unsigned long>(k.num_terms()));
            const Rat nn(static_cast<unsigned long>(n));
            Rat arm_rho = (h + (1 + rho * nn) * k.t * y) * y;
            out.push_back({"(|H|+(1+rho n)t|Y|)|Y|", arm_rho,
                           {{"|H|", rat_str(h)}, {"rho", rat_str(rho)}}});
            Rat range = evaluate(Constraint(k), box.c);
            Rat arm1 = range - Rat(floor_rat(k.t));
            if (sgn(arm1) < 0) arm1 = 0;
            Rat arm2 = h + (1 + Rat(pow2(d)) * nn) * k.t * y;
            out.push_back({"min{R-t,|H|+(1+2^d n)t|Y|}|Y|",
                           std::min(arm1, arm2) * y,
                           {{"R", rat_str(range)},
                            {"t", rat_str(k.t)},
                            {"d", std::to_string(d)},
                            {"|H|", rat_str(h)}}});
          }
        }
        if constexpr (std::is_same_v<T, SocIneq>) {
          const Int m = Int(static_cast<unsigned long>(n)) *
                        Int(static_cast<unsigned long>(n ? n - 1 : 0)) / 2;
          Int cells = phi_cells(static_cast<unsigned>(k.rows()), m);
          out.push_back({"Phi_d(n(n-1)/2)n|Y|",
                         Rat(cells) * Rat(static_cast<unsigned long>(n)) * y,
                         {{"d", std::to_string(k.rows())},
                          {"Phi", cells.get_str()}}});
        }
        if constexpr (std::is_same_v<T, PsdIneq>) {
          const std::size_t d = sym_rank(k.T);
          const Int m = Int(static_cast<unsigned long>(n)) *
                        Int(static_cast<unsigned long>(n ? n - 1 : 0)) / 2;
          Int cells = psi_cells(static_cast<unsigned>(d), 2, m);
          out.push_back({"Psi_{d,2}(n(n-1)/2)n|Y|",
                         Rat(cells) * Rat(static_cast<unsigned long>(n)) * y,
                         {{"d", std::to_string(d)}, {"Psi", cells.get_str()}}});
        }
      },
      c);
  return out;
}

// Descending sorting permutation of f's unit-vector values, ties by index.
std::vector<std::size_t> unit_weight_order(const OrderedFn& f, std::size_t n) {
  std::vector<LinSqrtVal> w;
  w.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    IntVec e = zero_vec(n);
    e[j] = 1;
    w.push_back(f(e));
  }
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::stable_sort(sigma.begin(), sigma.end(), [&](std::size_t i, std::size_t j) {
    return compare(w[i], w[j]) > 0;
  });
  return sigma;
}

}  // namespace

std::vector<BoundReport> bound_rows(const InequalitySystem& sys, const VecSet& y) {
  std::vector<BoundReport> rows;
  const std::size_t ysz = y.size();

  if (sys.mode == Mode::MinFeasible) {
    BoundReport r;
    r.formula = "|Y|^{o(log L)}";
    r.classes = "system";
    r.y_size = ysz;
    r.params["L"] = bit_length_L(sys).get_str();
    rows.push_back(std::move(r));
    return rows;
  }

  // per-formula union rows: a formula appears when it covers every constraint
  std::vector<std::vector<KindValue>> per(sys.constraints.size());
  for (std::size_t i = 0; i < sys.constraints.size(); ++i)
    per[i] = concrete_kinds(sys.constraints[i], sys.box, ysz);

  std::vector<std::string> formulas;
  for (const auto& kinds : per)
    for (const auto& kv : kinds)
      if (std::find(formulas.begin(), formulas.end(), kv.formula) == formulas.end())
        formulas.push_back(kv.formula);

  for (const std::string& fm : formulas) {
    Rat total = 0;
    bool all = true;
    std::map<std::string, std::string> params;
    for (const auto& kinds : per) {
      auto it = std::find_if(kinds.begin(), kinds.end(),
                             [&](const KindValue& kv) { return kv.formula == fm; });
      if (it == kinds.end()) {
        all = false;
        break;
      }
      total += it->value;
      params.insert(it->params.begin(), it->params.end());
    }
    if (!all) continue;
    BoundReport r;
    r.formula = fm;
    r.classes = sys.constraints.empty() ? "none" : class_name(sys.constraints[0]);
    r.bound = total;
    r.y_size = ysz;
    r.params = std::move(params);
    r.params["r"] = std::to_string(sys.constraints.size());
    rows.push_back(std::move(r));
  }

  // union of the per-constraint best concrete bounds
  {
    Rat total = 0;
    bool all = !per.empty();
    for (const auto& kinds : per) {
      if (kinds.empty()) {
        all = false;
        break;
      }
      Rat best = kinds[0].value;
      for (const auto& kv : kinds) best = std::min(best, kv.value);
      total += best;
    }
    if (all && formulas.size() > 1) {
      BoundReport r;
      r.formula = "union";
      r.classes = "system";
      r.bound = total;
      r.y_size = ysz;
      rows.push_back(std::move(r));
    }
  }

  // 2-monotonic lemma: r' sum_y q(y), needs every constraint verified
  {
    bool all = !sys.constraints.empty();
    std::set<std::vector<std::size_t>> sigmas;
    for (const Constraint& c : sys.constraints) {
      if (std::holds_alternative<PsdIneq>(c)) {
        all = false;
        break;
      }
      OrderedFn f = ordered_fn_of(c);
      std::vector<std::size_t> sigma = unit_weight_order(f, sys.dim());
      bool ok = false;
      try {
        ok = check_2monotonic(f, sys.box, sigma);
      } catch (const std::length_error&) {
      }
      if (!ok) {
        all = false;
        break;
      }
      sigmas.insert(std::move(sigma));
    }
    if (all) {
      Int q_sum = 0;
      for (const IntVec& v : y)
        for (std::size_t j = 0; j < v.size(); ++j)
          if (v[j] < sys.box.c[j]) ++q_sum;
      BoundReport r;
      r.formula = "r'sum q(y)";
      r.classes = "system";
      r.bound = Rat(Int(static_cast<unsigned long>(sigmas.size())) * q_sum);
      r.y_size = ysz;
      r.params["r'"] = std::to_string(sigmas.size());
      r.params["sum q(y)"] = q_sum.get_str();
      rows.push_back(std::move(r));
    }
  }

  // supermodular tables carry only the asymptotic traction bound
  for (const Constraint& c : sys.constraints) {
    const auto* tab = std::get_if<SupermodularTableIneq>(&c);
    if (!tab) continue;
    BoundReport r;
    r.formula = "|Y|^{o(log (R-t)/tau)}";
    r.classes = class_name(c);
    r.y_size = ysz;
    r.params["R"] = rat_str(tab->range());
    r.params["t"] = rat_str(tab->t);
    auto tau = traction(table_fn_of(c), IntBox(tab->shape));
    r.params["tau"] = tau ? rat_str(*tau) : "inf";
    if (tau) r.params["(R-t)/tau"] = rat_str((tab->range() - tab->t) / *tau);
    rows.push_back(std::move(r));
  }

  return rows;
}

// ---------------------------------------------------------------------------
// Empirical verification

namespace {

struct WrappedGround {
  FeasOracle oracle;
  VecSet f;     // maximal feasible (wrapped coordinates)
  VecSet i_f;   // minimal infeasible (wrapped coordinates)
};

WrappedGround ground_truth(const InequalitySystem& sys) {
  WrappedGround g{sys.mode == Mode::MaxFeasible ? oracle_of(sys) : reflect(sys),
                  {}, {}};
  BruteResult r = enumerate_all(g.oracle);
  g.f = std::move(r.max_feasible);
  g.i_f = std::move(r.min_infeasible);
  return g;
}

IntVec to_wrapped(const InequalitySystem& sys, const IntVec& v) {
  if (sys.mode == Mode::MaxFeasible) return v;
  IntVec w(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) w[j] = sys.box.c[j] - v[j];
  return w;
}

VecSet intersection_measure(const IntBox& box, const VecSet& yw, const VecSet& i_f) {
  Antichain a(Orientation::MaximalKept);
  for (const IntVec& v : yw) a.insert(v);
  VecSet iy = brute_IA(box, a);
  VecSet out;
  for (const IntVec& v : iy)
    if (i_f.count(v)) out.insert(v);
  return out;
}

}  // namespace

VecSet empirical_dual_intersection(const InequalitySystem& sys, const VecSet& y) {
  WrappedGround g = ground_truth(sys);
  VecSet yw;
  for (const IntVec& v : y) {
    IntVec w = to_wrapped(sys, v);
    if (!g.f.count(w))
      throw std::invalid_argument("empirical_dual_intersection: " + vec_to_string(v) +
                                  " is not a member of the feasible family");
    yw.insert(std::move(w));
  }
  return intersection_measure(sys.box, yw, g.i_f);
}

std::vector<BoundReport> verify_bounds(const InequalitySystem& sys, unsigned trials,
                                       unsigned long long seed) {
  WrappedGround g = ground_truth(sys);
  std::vector<BoundReport> out;
  if (g.f.empty()) return out;

  std::vector<IntVec> pool(g.f.begin(), g.f.end());
  std::mt19937_64 rng(seed);
  const std::size_t min_sz = std::min<std::size_t>(2, pool.size());

  for (unsigned trial = 0; trial < trials; ++trial) {
    std::uniform_int_distribution<std::size_t> size_dist(min_sz, pool.size());
    const std::size_t k = size_dist(rng);
    std::vector<std::size_t> idx(pool.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    VecSet yw;
    for (std::size_t i = 0; i < k; ++i) yw.insert(pool[idx[i]]);

    const unsigned long long measured =
        intersection_measure(sys.box, yw, g.i_f).size();
    VecSet y_orig;
    for (const IntVec& v : yw) y_orig.insert(to_wrapped(sys, v));  // involution
    for (BoundReport r : bound_rows(sys, y_orig)) {
      r.measured = measured;
      out.push_back(std::move(r));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Intersection Lemma

IntersectionLemmaResult intersection_lemma_check(const IntersectionLemmaInput& in) {
  if (cmp(in.t2, in.t1) <= 0)
    throw std::invalid_argument("intersection_lemma_check: need t1 < t2");
  if (in.w.size() != in.u_size)
    throw std::invalid_argument("intersection_lemma_check: weight size mismatch");
  for (const Rat& v : in.w)
    if (sgn(v) < 0)
      throw std::invalid_argument("intersection_lemma_check: negative weight");
  auto weight = [&](const std::set<std::size_t>& xs) {
    Rat s = 0;
    for (std::size_t v : xs) {
      if (v >= in.u_size)
        throw std::invalid_argument("intersection_lemma_check: element outside U");
      s += in.w[v];
    }
    return s;
  };

  IntersectionLemmaResult res;
  if (in.s_family.size() < 2) return res;
  for (const auto& s : in.s_family)
    if (cmp(weight(s), in.t2) < 0) return res;
  for (const auto& t : in.t_family)
    if (cmp(weight(t), in.t1) > 0) return res;
  for (std::size_t i = 0; i < in.s_family.size(); ++i) {
    for (std::size_t j = i + 1; j < in.s_family.size(); ++j) {
      std::set<std::size_t> inter;
      std::set_intersection(in.s_family[i].begin(), in.s_family[i].end(),
                            in.s_family[j].begin(), in.s_family[j].end(),
                            std::inserter(inter, inter.begin()));
      bool covered = false;
      for (const auto& t : in.t_family) {
        if (std::includes(t.begin(), t.end(), inter.begin(), inter.end())) {
          covered = true;
          break;
        }
      }
      if (!covered) return res;
    }
  }
  res.applicable = true;

  std::size_t complement_sum = 0;
  for (const auto& t : in.t_family) complement_sum += in.u_size - t.size();
  res.part_i = in.s_family.size() <= complement_sum;

  Rat total = 0;
  for (const Rat& v : in.w) total += v;
  Rat rhs = (total - in.t1) / (in.t2 - in.t1) *
            Rat(static_cast<unsigned long>(in.t_family.size()));
  res.part_ii = cmp(Rat(static_cast<unsigned long>(in.s_family.size())), rhs) <= 0;
  return res;
}

// ---------------------------------------------------------------------------
// Sorting-permutation sampling

WeightOrderResult distinct_weight_orders(const Constraint& c, std::size_t samples,
                                         unsigned long long seed) {
  constexpr long kGrid = 1000;
  std::mt19937_64 rng(seed);
  WeightOrderResult res;

  auto record = [&](const std::vector<Rat>& w) {
    std::vector<std::size_t> sigma(w.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    std::stable_sort(sigma.begin(), sigma.end(),
                     [&](std::size_t i, std::size_t j) { return cmp(w[i], w[j]) > 0; });
    res.perms.insert(std::move(sigma));
  };

  if (const auto* soc = std::get_if<SocIneq>(&c)) {
    const std::size_t d = soc->rows(), n = soc->b.size();
    const Int m = Int(static_cast<unsigned long>(n)) *
                  Int(static_cast<unsigned long>(n ? n - 1 : 0)) / 2;
    res.cell_bound = phi_cells(static_cast<unsigned>(d), m);
    std::uniform_int_distribution<long> coord(0, kGrid);
    for (std::size_t s = 0; s < samples; ++s) {
      std::vector<Rat> u(d);
      long norm2 = 0;
      for (std::size_t i = 0; i < d; ++i) {
        long v = coord(rng);
        norm2 += v * v;
        u[i] = Rat(v, kGrid);
      }
      if (norm2 > kGrid * kGrid) continue;  // rejection keeps u in the ball
      record(soc_weight_vector(*soc, u));
    }
    return res;
  }
  if (const auto* psd = std::get_if<PsdIneq>(&c)) {
    const std::size_t d = psd->T.size(), n = psd->mats.size();
    const Int m = Int(static_cast<unsigned long>(n)) *
                  Int(static_cast<unsigned long>(n ? n - 1 : 0)) / 2;
    res.cell_bound = psi_cells(static_cast<unsigned>(d), 2, m);
    std::uniform_int_distribution<long> coord(-kGrid, kGrid);
    for (std::size_t s = 0; s < samples; ++s) {
      std::vector<Rat> u(d);
      long norm2 = 0;
      for (std::size_t i = 0; i < d; ++i) {
        long v = coord(rng);
        norm2 += v * v;
        u[i] = Rat(v, kGrid);
      }
      if (norm2 > kGrid * kGrid) continue;
      std::vector<Rat> w(n);
      for (std::size_t j = 0; j < n; ++j) w[j] = psd->mats[j].quad_form(u);
      record(w);
    }
    return res;
  }
  throw std::invalid_argument("distinct_weight_orders: expects a soc or psd constraint");
}

}  // namespace monogen
