#include "monogen/applications.hpp"

#include <cmath>
#include <stdexcept>

namespace monogen {

namespace {

constexpr long double kInvSqrt2Pi =
    0.3989422804014326779399460599343818684759L;

Rat rat_of_mpf(const mpf_class& f) {
  Rat q;
  mpq_set_f(q.get_mpq_t(), f.get_mpf_t());
  return q;
}

mpf_class mpf_of_rat(const Rat& q, mp_bitcnt_t prec) {
  mpf_class f(0, prec);
  mpf_set_q(f.get_mpf_t(), q.get_mpq_t());
  return f;
}

}  // namespace

long double std_normal_cdf(long double x) {
  if (x < 0) return 1.0L - std_normal_cdf(-x);
  if (x > 12) return 1.0L;
  // Phi(x) = 1/2 + phi(x) sum_{n>=0} x^{2n+1} / (2n+1)!!  (positive terms)
  long double term = x, sum = x;
  for (int n = 1; n < 400; ++n) {
    term *= x * x / (2 * n + 1);
    sum += term;
    if (term < 1e-25L * sum) break;
  }
  return 0.5L + kInvSqrt2Pi * std::exp(-x * x / 2) * sum;
}

Rat inv_norm_cdf(const Rat& p, double tol) {
  if (sgn(p) <= 0 || cmp(p, Rat(1)) >= 0)
    throw std::domain_error("inv_norm_cdf: p must lie strictly between 0 and 1");
  if (cmp(p, Rat(1, 2)) == 0) return Rat(0);  // exact median
  const long double pd = static_cast<long double>(mpq_get_d(p.get_mpq_t()));
  long double lo = -10, hi = 10;
  while (hi - lo > tol) {
    long double mid = (lo + hi) / 2;
    if (std_normal_cdf(mid) < pd)
      lo = mid;
    else
      hi = mid;
  }
  Rat out;
  mpq_set_d(out.get_mpq_t(), static_cast<double>((lo + hi) / 2));
  return out;
}

InequalitySystem build_transversal(std::size_t n,
                                   const std::vector<std::set<std::size_t>>& edges) {
  if (n == 0 || edges.empty())
    throw std::invalid_argument("build_transversal: empty ground set or hypergraph");
  ProductAffineIneq prod;
  prod.t = 1;
  for (const auto& edge : edges) {
    if (edge.empty())
      throw std::invalid_argument("build_transversal: empty edge makes the system infeasible");
    AffineForm f;
    f.a.assign(n, Rat(0));
    f.a0 = 0;
    for (std::size_t j : edge) {
      if (j >= n) throw std::invalid_argument("build_transversal: vertex outside ground set");
      f.a[j] = 1;
    }
    prod.factors.push_back(std::move(f));
  }
  InequalitySystem sys{IntBox(IntVec(n, Int(1))), {Constraint(std::move(prod))},
                       Mode::MinFeasible};
  for (const Constraint& c : sys.constraints) validate_constraint(c, true);
  return sys;
}

InequalitySystem build_nash_welfare(const std::vector<std::vector<Rat>>& utilities,
                                    const std::vector<Rat>& demands, const Rat& t,
                                    const IntVec& caps) {
  const std::size_t m = utilities.size();
  if (m == 0 || demands.size() != m)
    throw std::invalid_argument("build_nash_welfare: need one utility row and demand per agent");
  const std::size_t n = caps.size();
  InequalitySystem sys{IntBox(caps), {}, Mode::MinFeasible};

  ProductAffineIneq prod;
  Rat tm = 1;
  for (std::size_t i = 0; i < m; ++i) tm *= t;  // (prod u_i)^{1/m} >= t  <=>  prod u_i >= t^m
  prod.t = tm;
  for (const auto& row : utilities) {
    if (row.size() != n)
      throw std::invalid_argument("build_nash_welfare: utility row length mismatch");
    prod.factors.push_back({row, Rat(0)});
  }
  sys.constraints.emplace_back(std::move(prod));
  for (std::size_t i = 0; i < m; ++i)
    sys.constraints.emplace_back(LinearIneq{utilities[i], demands[i]});
  for (const Constraint& c : sys.constraints) validate_constraint(c, true);
  return sys;
}

InequalitySystem build_chance_knapsack(const ChanceKnapsackSpec& spec) {
  const std::size_t r = spec.means.size();
  if (spec.factors.size() != r || spec.alphas.size() != r || spec.caps.size() != r)
    throw std::invalid_argument("build_chance_knapsack: field lengths disagree");
  if (r == 0) throw std::invalid_argument("build_chance_knapsack: no constraints");
  const std::size_t n = spec.means[0].size();

  InequalitySystem sys{IntBox(IntVec(n, Int(1))), {}, Mode::MaxFeasible};
  for (std::size_t i = 0; i < r; ++i) {
    if (cmp(spec.alphas[i], Rat(1, 2)) < 0 || cmp(spec.alphas[i], Rat(1)) >= 0)
      throw std::invalid_argument("build_chance_knapsack: alpha must lie in [1/2, 1)");
    if (spec.means[i].size() != n)
      throw std::invalid_argument("build_chance_knapsack: mean vector length mismatch");
    const Rat q = inv_norm_cdf(spec.alphas[i]);
    SocIneq soc;
    soc.b = spec.means[i];
    soc.t = spec.caps[i];
    for (const auto& row : spec.factors[i]) {
      if (row.size() != n)
        throw std::invalid_argument("build_chance_knapsack: factor row length mismatch");
      std::vector<Rat> scaled(n);
      for (std::size_t j = 0; j < n; ++j) scaled[j] = q * row[j];
      soc.A.push_back(std::move(scaled));
    }
    sys.constraints.emplace_back(std::move(soc));
  }
  for (const Constraint& c : sys.constraints) validate_constraint(c, false);
  return sys;
}

ChanceCoverBuild build_chance_cover(const ChanceCoverSpec& spec) {
  const std::size_t r = spec.means.size();
  if (spec.devs.size() != r || spec.alphas.size() != r || spec.demands.size() != r)
    throw std::invalid_argument("build_chance_cover: field lengths disagree");
  if (r == 0) throw std::invalid_argument("build_chance_cover: no constraints");
  const std::size_t n = spec.means[0].size();
  constexpr mp_bitcnt_t kPrec = 192;  // ~58 decimal digits

  ChanceCoverBuild out;
  out.system = {IntBox(IntVec(n, Int(1))), {}, Mode::MinFeasible};

  for (std::size_t i = 0; i < r; ++i) {
    const auto& a = spec.means[i];
    const auto& d = spec.devs[i];
    if (a.size() != n || d.size() != n)
      throw std::invalid_argument("build_chance_cover: vector length mismatch");
    for (const Rat& v : d)
      if (sgn(v) <= 0)
        throw std::invalid_argument("build_chance_cover: deviations must be positive");
    if (sgn(spec.alphas[i]) <= 0 || cmp(spec.alphas[i], Rat(1, 2)) > 0)
      throw std::invalid_argument("build_chance_cover: alpha must lie in (0, 1/2]");
    const Rat q = inv_norm_cdf(Rat(1) - spec.alphas[i]);
    const mpf_class qf = mpf_of_rat(q, kPrec);

    // tabulate g(x) = a^T x + q sqrt(sum_j d_j^2 x_j) over {0,1}^n
    SupermodularTableIneq tab;
    tab.shape = IntVec(n, Int(1));
    tab.t = spec.demands[i];
    IntVec x = zero_vec(n);
    do {
      mpf_class lin(0, kPrec), var(0, kPrec);
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(x[j]) == 0) continue;
        lin += mpf_of_rat(a[j], kPrec);
        mpf_class dj = mpf_of_rat(d[j], kPrec);
        var += dj * dj;
      }
      mpf_class g = lin + qf * sqrt(var);
      tab.values.push_back(rat_of_mpf(g));
    } while (next_point(x, tab.shape));
    validate_constraint(Constraint(tab), true);

    // complement transform f(z) = R - g(1 - z) must be monotone supermodular
    const Rat range = tab.values.back();
    auto f = [&tab, &range, n](const IntVec& z) {
      IntVec y(n);
      for (std::size_t j = 0; j < n; ++j) y[j] = 1 - z[j];
      return range - tab.value(y);
    };
    const IntBox box(tab.shape);
    IntVec z = zero_vec(n);
    do {
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(z[j]) != 0) continue;
        if (sgn(Rat(f(unit_step(z, j, 1)) - f(z))) < 0)
          throw std::logic_error("build_chance_cover: non-monotone unit difference");
      }
    } while (next_point(z, box.c));
    if (!check_supermodular(f, box))
      throw std::logic_error("build_chance_cover: tabulated f is not supermodular");

    auto tau = traction(f, box);
    out.measured_traction.push_back(tau.value_or(Rat(0)));

    // analytic lower bound min{a_min, q d_min^2 / (2 sqrt(n) d_max)},
    // rounded down through the float-to-rational snapshot
    Rat a_min;
    bool have_a = false;
    for (const Rat& v : a)
      if (sgn(v) > 0 && (!have_a || cmp(v, a_min) < 0)) {
        a_min = v;
        have_a = true;
      }
    Rat d_min = d[0], d_max = d[0];
    for (const Rat& v : d) {
      d_min = std::min(d_min, v);
      d_max = std::max(d_max, v);
    }
    mpf_class sn(0, kPrec);
    mpf_set_ui(sn.get_mpf_t(), static_cast<unsigned long>(n));
    mpf_class bound = qf * mpf_of_rat(d_min * d_min, kPrec) /
                      (2 * sqrt(sn) * mpf_of_rat(d_max, kPrec));
    bound -= mpf_class(1e-30, kPrec);  // keep the snapshot on the safe side
    Rat analytic = rat_of_mpf(bound);
    if (sgn(analytic) < 0) analytic = 0;
    if (have_a) analytic = std::min(analytic, a_min);
    out.analytic_traction.push_back(std::move(analytic));

    out.system.constraints.emplace_back(std::move(tab));
  }
  return out;
}

InequalitySystem build_quantum_cover(const QuantumCoverSpec& spec) {
  if (spec.ops.empty())
    throw std::invalid_argument("build_quantum_cover: no operators");
  const std::size_t d = spec.ops[0].size();
  SymMat t = SymMat::identity(d).scaled(Rat(-1));
  for (const SymMat& a : spec.ops) {
    if (a.size() != d)
      throw std::invalid_argument("build_quantum_cover: operator dimension mismatch");
    if (!psd_check(a))
      throw std::invalid_argument("build_quantum_cover: operator is not PSD");
    SymMat slack = SymMat::identity(d);
    slack.add_scaled(a, Rat(-1));
    if (!psd_check(slack))
      throw std::invalid_argument("build_quantum_cover: operator exceeds the identity");
    t.add_scaled(a, Rat(1));
  }
  if (!psd_check(t))
    throw std::invalid_argument("build_quantum_cover: hypergraph has no cover");

  PsdIneq psd{spec.ops, std::move(t)};
  InequalitySystem sys{IntBox(IntVec(spec.ops.size(), Int(1))),
                       {Constraint(std::move(psd))}, Mode::MaxFeasible};
  for (const Constraint& c : sys.constraints) validate_constraint(c, false);
  return sys;
}

std::vector<std::set<std::size_t>> decode_quantum_covers(const VecSet& max_feasible) {
  std::vector<std::set<std::size_t>> covers;
  for (const IntVec& x : max_feasible) {
    std::set<std::size_t> cover;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (sgn(x[j]) == 0) cover.insert(j);
    covers.push_back(std::move(cover));
  }
  return covers;
}

}  // namespace monogen
