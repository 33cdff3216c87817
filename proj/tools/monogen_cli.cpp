#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "monogen/applications.hpp"
#include "monogen/bounds.hpp"
#include "monogen/brute_force.hpp"
#include "monogen/generation.hpp"
#include "monogen/problem_io.hpp"

namespace {

using namespace monogen;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<Rat> parse_rat_list(const std::string& s) {
  std::vector<Rat> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(parse_rational(tok));
  return out;
}

std::vector<std::vector<Rat>> parse_rat_rows(const std::string& s) {
  std::vector<std::vector<Rat>> out;
  std::istringstream is(s);
  std::string row;
  while (std::getline(is, row, ';')) out.push_back(parse_rat_list(row));
  return out;
}

IntVec parse_int_list(const std::string& s) {
  IntVec out;
  for (const Rat& q : parse_rat_list(s)) {
    if (!is_integer(q)) throw std::invalid_argument("expected integers in '" + s + "'");
    out.push_back(q.get_num());
  }
  return out;
}

int cmd_enumerate(const std::string& path, unsigned long long limit, bool has_limit,
                  bool sorted, bool stats) {
  InequalitySystem sys = instantiate(parse_problem(read_file(path)));
  std::vector<OutputRecord> records;
  auto sink = [&](EmissionTag tag, const IntVec& v) {
    if (sorted)
      records.push_back({tag, v});
    else
      std::cout << format_record({tag, v}) << '\n';
    return true;
  };
  GenerationState st = joint_generate(
      sys, sink, has_limit ? std::optional<unsigned long long>(limit) : std::nullopt);
  if (sorted) {
    std::stable_sort(records.begin(), records.end(),
                     [](const OutputRecord& a, const OutputRecord& b) {
                       if (a.tag != b.tag) return a.tag < b.tag;
                       return LexLess{}(a.vec, b.vec);
                     });
    for (const OutputRecord& r : records) std::cout << format_record(r) << '\n';
  }
  if (stats) {
    std::cout << "# max_feasible " << st.confirmed_max.size() << '\n'
              << "# min_infeasible " << st.confirmed_min.size() << '\n'
              << "# oracle_calls " << st.oracle_calls << '\n'
              << "# dual_steps " << st.dual_steps << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& path) {
  InequalitySystem sys = instantiate(parse_problem(read_file(path)));
  VecSet gen_primary, gen_secondary;
  joint_generate(sys, [&](EmissionTag tag, const IntVec& v) {
    (tag == EmissionTag::MinInfeasible ? gen_secondary : gen_primary).insert(v);
    return true;
  });
  SystemBrute brute = enumerate_system(sys);

  auto report_diff = [](const char* label, const VecSet& got, const VecSet& want) {
    bool ok = true;
    for (const IntVec& v : want)
      if (!got.count(v)) {
        std::cout << label << " missing " << vec_to_string(v) << '\n';
        ok = false;
      }
    for (const IntVec& v : got)
      if (!want.count(v)) {
        std::cout << label << " spurious " << vec_to_string(v) << '\n';
        ok = false;
      }
    return ok;
  };
  bool ok = report_diff("primary", gen_primary, brute.primary);
  if (sys.mode == Mode::MaxFeasible)
    ok = report_diff("dual", gen_secondary, brute.secondary) && ok;
  std::cout << (ok ? "MATCH" : "MISMATCH") << " primary=" << brute.primary.size()
            << " dual=" << brute.secondary.size() << '\n';
  return ok ? 0 : 1;
}

int cmd_bounds(const std::string& path, unsigned trials, unsigned long long seed) {
  InequalitySystem sys = instantiate(parse_problem(read_file(path)));
  bool ok = true;
  for (const BoundReport& r : verify_bounds(sys, trials, seed)) {
    std::cout << r.formula << '\t' << r.classes << "\t|Y|=" << r.y_size
              << "\tmeasured=" << r.measured << "\tbound="
              << (r.bound ? to_string(*r.bound) : std::string("asymptotic"));
    for (const auto& [k, v] : r.params) std::cout << '\t' << k << '=' << v;
    std::cout << '\t' << (r.asymptotic() ? "report" : r.pass() ? "pass" : "FAIL")
              << '\n';
    ok = ok && r.pass();
  }
  return ok ? 0 : 1;
}

void emit_problem(const InequalitySystem& sys) {
  ProblemFile pf;
  pf.box_c = sys.box.c;
  pf.mode = sys.mode;
  pf.constraints = sys.constraints;
  std::cout << serialize_problem(pf);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint enumeration of maximal feasible and minimal infeasible "
               "vectors of monotone inequality systems"};
  app.require_subcommand(1);

  std::string path;
  unsigned long long limit = 0;
  bool sorted = false, stats = false;
  auto* enumerate = app.add_subcommand("enumerate", "stream the joint generation");
  enumerate->add_option("input", path)->required();
  auto* limit_opt = enumerate->add_option("--limit", limit, "stop after N emissions");
  enumerate->add_flag("--sorted", sorted, "sort the output after generation");
  enumerate->add_flag("--stats", stats, "append counters");

  auto* verify = app.add_subcommand("verify", "compare against brute force");
  verify->add_option("input", path)->required();

  unsigned trials = 50;
  unsigned long long seed = 1;
  auto* bounds = app.add_subcommand("bounds", "empirical dual-bound reports");
  bounds->add_option("input", path)->required();
  bounds->add_option("--trials", trials);
  bounds->add_option("--seed", seed);

  auto* build = app.add_subcommand("build", "emit an application problem file");
  build->require_subcommand(1);
  std::size_t n = 0;
  std::string edges, utilities, demands, caps, a_str, mat_str, d_str;
  std::string alpha = "1/2", t_str = "1";
  std::size_t dim = 1;

  auto* transversal = build->add_subcommand("transversal");
  transversal->add_option("--n", n)->required();
  transversal->add_option("--edges", edges, "e.g. \"1,2;2,3\"")->required();

  auto* nash = build->add_subcommand("nash");
  nash->add_option("--utilities", utilities, "rows per agent")->required();
  nash->add_option("--demands", demands)->required();
  nash->add_option("--t", t_str);
  nash->add_option("--caps", caps)->required();

  auto* knapsack = build->add_subcommand("knapsack");
  knapsack->add_option("--a", a_str, "mean vector")->required();
  knapsack->add_option("--A", mat_str, "factor matrix rows")->required();
  knapsack->add_option("--alpha", alpha);
  knapsack->add_option("--t", t_str);

  auto* cover = build->add_subcommand("cover");
  cover->add_option("--a", a_str, "mean vector")->required();
  cover->add_option("--d", d_str, "deviations")->required();
  cover->add_option("--alpha", alpha);
  cover->add_option("--t", t_str);

  auto* quantum = build->add_subcommand("quantum");
  quantum->add_option("--dim", dim)->required();
  quantum->add_option("--mats", mat_str, "row-major d*d matrices, ';'-separated")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (enumerate->parsed())
      return cmd_enumerate(path, limit, limit_opt->count() > 0, sorted, stats);
    if (verify->parsed()) return cmd_verify(path);
    if (bounds->parsed()) return cmd_bounds(path, trials, seed);
    if (transversal->parsed()) {
      std::vector<std::set<std::size_t>> hs;
      for (const IntVec& row : [&] {
             std::vector<IntVec> rows;
             std::istringstream is(edges);
             std::string e;
             while (std::getline(is, e, ';')) rows.push_back(parse_int_list(e));
             return rows;
           }()) {
        std::set<std::size_t> edge;
        for (const Int& v : row) {
          if (v < 1) throw std::invalid_argument("vertices are 1-based");
          edge.insert(v.get_ui() - 1);
        }
        hs.push_back(std::move(edge));
      }
      emit_problem(build_transversal(n, hs));
      return 0;
    }
    if (nash->parsed()) {
      std::vector<Rat> dem = parse_rat_list(demands);
      emit_problem(build_nash_welfare(parse_rat_rows(utilities), dem,
                                      parse_rational(t_str), parse_int_list(caps)));
      return 0;
    }
    if (knapsack->parsed()) {
      ChanceKnapsackSpec spec;
      spec.means = {parse_rat_list(a_str)};
      spec.factors = {parse_rat_rows(mat_str)};
      spec.alphas = {parse_rational(alpha)};
      spec.caps = {parse_rational(t_str)};
      emit_problem(build_chance_knapsack(spec));
      return 0;
    }
    if (cover->parsed()) {
      ChanceCoverSpec spec;
      spec.means = {parse_rat_list(a_str)};
      spec.devs = {parse_rat_list(d_str)};
      spec.alphas = {parse_rational(alpha)};
      spec.demands = {parse_rational(t_str)};
      ChanceCoverBuild b = build_chance_cover(spec);
      for (std::size_t i = 0; i < b.measured_traction.size(); ++i)
        std::cerr << "traction[" << i << "] measured=" << to_string(b.measured_traction[i])
                  << " analytic>=" << to_string(b.analytic_traction[i]) << '\n';
      emit_problem(b.system);
      return 0;
    }
    if (quantum->parsed()) {
      QuantumCoverSpec spec;
      for (const std::vector<Rat>& flat : parse_rat_rows(mat_str)) {
        if (flat.size() != dim * dim)
          throw std::invalid_argument("matrix entry count does not match --dim");
        SymMat m(dim);
        for (std::size_t i = 0; i < dim; ++i)
          for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = flat[i * dim + j];
        for (std::size_t i = 0; i < dim; ++i)
          for (std::size_t j = i + 1; j < dim; ++j)
            if (cmp(m.at(i, j), m.at(j, i)) != 0)
              throw std::invalid_argument("operator matrices must be symmetric");
        spec.ops.push_back(std::move(m));
      }
      emit_problem(build_quantum_cover(spec));
      return 0;
    }
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what()
              << " (shrink the box or raise the brute-force capacity)" << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
