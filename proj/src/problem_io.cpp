#include "monogen/problem_io.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace monogen {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument("problem file: " + where + ": " + what);
}

void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) fail(where, "unknown field '" + key + "'");
  }
}

const json& field(const json& obj, const std::string& where, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) fail(where, std::string("missing field '") + name + "'");
  return *it;
}

Rat get_rat(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected an integer or a \"p/q\" string");
}

Int get_int(const json& v, const std::string& where) {
  Rat q = get_rat(v, where);
  if (!is_integer(q)) fail(where, "expected an integer");
  return q.get_num();
}

std::vector<Rat> get_rat_vec(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array");
  std::vector<Rat> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(get_rat(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

SymMat get_matrix(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) fail(where, "expected a nonempty matrix");
  const std::size_t m = v.size();
  SymMat out(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rat> row = get_rat_vec(v[i], where + "[" + std::to_string(i) + "]");
    if (row.size() != m) fail(where, "matrix is not square");
    for (std::size_t j = 0; j < m; ++j) out.at(i, j) = row[j];
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (cmp(out.at(i, j), out.at(j, i)) != 0) fail(where, "matrix is not symmetric");
  return out;
}

Constraint parse_constraint(const json& obj, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  const std::string cls = field(obj, where, "class").get<std::string>();
  if (cls == "linear") {
    check_keys(obj, where, {"class", "a", "t"});
    return LinearIneq{get_rat_vec(field(obj, where, "a"), where + ".a"),
                      get_rat(field(obj, where, "t"), where + ".t")};
  }
  if (cls == "separable") {
    check_keys(obj, where, {"class", "tables", "t"});
    const json& tabs = field(obj, where, "tables");
    if (!tabs.is_array()) fail(where + ".tables", "expected an array");
    SeparableIneq out;
    for (std::size_t j = 0; j < tabs.size(); ++j)
      out.tables.push_back(
          get_rat_vec(tabs[j], where + ".tables[" + std::to_string(j) + "]"));
    out.t = get_rat(field(obj, where, "t"), where + ".t");
    return out;
  }
  if (cls == "polynomial") {
    check_keys(obj, where, {"class", "n", "terms", "t"});
    PolynomialIneq out;
    out.n = get_int(field(obj, where, "n"), where + ".n").get_ui();
    const json& terms = field(obj, where, "terms");
    if (!terms.is_array()) fail(where + ".terms", "expected an array");
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const std::string tw = where + ".terms[" + std::to_string(k) + "]";
      check_keys(terms[k], tw, {"coef", "exps"});
      PolyTerm term;
      term.coef = get_rat(field(terms[k], tw, "coef"), tw + ".coef");
      const json& exps = field(terms[k], tw, "exps");
      if (!exps.is_object()) fail(tw + ".exps", "expected an object");
      for (const auto& [key, val] : exps.items()) {
        std::size_t j = 0;
        try {
          j = std::stoul(key);
        } catch (...) {
          fail(tw + ".exps", "bad variable index '" + key + "'");
        }
        if (j == 0) fail(tw + ".exps", "variable indices are 1-based");
        term.exps[j - 1] = static_cast<unsigned>(
            get_int(val, tw + ".exps." + key).get_ui());
      }
      out.terms.push_back(std::move(term));
    }
    out.t = get_rat(field(obj, where, "t"), where + ".t");
    return out;
  }
  if (cls == "product_affine") {
    check_keys(obj, where, {"class", "factors", "t"});
    const json& factors = field(obj, where, "factors");
    if (!factors.is_array()) fail(where + ".factors", "expected an array");
    ProductAffineIneq out;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const std::string fw = where + ".factors[" + std::to_string(k) + "]";
      check_keys(factors[k], fw, {"a", "a0"});
      out.factors.push_back({get_rat_vec(field(factors[k], fw, "a"), fw + ".a"),
                             get_rat(field(factors[k], fw, "a0"), fw + ".a0")});
    }
    out.t = get_rat(field(obj, where, "t"), where + ".t");
    return out;
  }
  if (cls == "supermodular_table") {
    check_keys(obj, where, {"class", "shape", "values", "t"});
    SupermodularTableIneq out;
    const json& shape = field(obj, where, "shape");
    if (!shape.is_array()) fail(where + ".shape", "expected an array");
    for (std::size_t j = 0; j < shape.size(); ++j)
      out.shape.push_back(get_int(shape[j], where + ".shape[" + std::to_string(j) + "]"));
    out.values = get_rat_vec(field(obj, where, "values"), where + ".values");
    out.t = get_rat(field(obj, where, "t"), where + ".t");
    return out;
  }
  if (cls == "soc") {
    check_keys(obj, where, {"class", "A", "b", "t"});
    const json& rows = field(obj, where, "A");
    if (!rows.is_array()) fail(where + ".A", "expected an array");
    SocIneq out;
    for (std::size_t i = 0; i < rows.size(); ++i)
      out.A.push_back(get_rat_vec(rows[i], where + ".A[" + std::to_string(i) + "]"));
    out.b = get_rat_vec(field(obj, where, "b"), where + ".b");
    out.t = get_rat(field(obj, where, "t"), where + ".t");
    return out;
  }
  if (cls == "psd") {
    check_keys(obj, where, {"class", "mats", "T"});
    const json& mats = field(obj, where, "mats");
    if (!mats.is_array()) fail(where + ".mats", "expected an array");
    PsdIneq out;
    for (std::size_t j = 0; j < mats.size(); ++j)
      out.mats.push_back(get_matrix(mats[j], where + ".mats[" + std::to_string(j) + "]"));
    out.T = get_matrix(field(obj, where, "T"), where + ".T");
    return out;
  }
  fail(where, "unknown constraint class '" + cls + "'");
}

json rat_json(const Rat& q) {
  if (is_integer(q) && mpz_fits_slong_p(q.get_num().get_mpz_t()))
    return json(q.get_num().get_si());
  return json(to_string(q));
}

json rat_vec_json(const std::vector<Rat>& v) {
  json a = json::array();
  for (const Rat& q : v) a.push_back(rat_json(q));
  return a;
}

json matrix_json(const SymMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(rat_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json constraint_json(const Constraint& c) {
  json obj;
  obj["class"] = class_name(c);
  std::visit(
      [&](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, LinearIneq>) {
          obj["a"] = rat_vec_json(k.a);
          obj["t"] = rat_json(k.t);
        } else if constexpr (std::is_same_v<T, SeparableIneq>) {
          json tabs = json::array();
          for (const auto& tab : k.tables) tabs.push_back(rat_vec_json(tab));
          obj["tables"] = std::move(tabs);
          obj["t"] = rat_json(k.t);
        } else if constexpr (std::is_same_v<T, PolynomialIneq>) {
          obj["n"] = k.n;
          json terms = json::array();
          for (const auto& term : k.terms) {
            json t;
            t["coef"] = rat_json(term.coef);
            json exps = json::object();
            for (const auto& [j, e] : term.exps) exps[std::to_string(j + 1)] = e;
            t["exps"] = std::move(exps);
            terms.push_back(std::move(t));
          }
          obj["terms"] = std::move(terms);
          obj["t"] = rat_json(k.t);
        } else if constexpr (std::is_same_v<T, ProductAffineIneq>) {
          json factors = json::array();
          for (const auto& f : k.factors) {
            json fj;
            fj["a"] = rat_vec_json(f.a);
            fj["a0"] = rat_json(f.a0);
            factors.push_back(std::move(fj));
          }
          obj["factors"] = std::move(factors);
          obj["t"] = rat_json(k.t);
        } else if constexpr (std::is_same_v<T, SupermodularTableIneq>) {
          json shape = json::array();
          for (const Int& v : k.shape) shape.push_back(v.get_si());
          obj["shape"] = std::move(shape);
          obj["values"] = rat_vec_json(k.values);
          obj["t"] = rat_json(k.t);
        } else if constexpr (std::is_same_v<T, SocIneq>) {
          json rows = json::array();
          for (const auto& row : k.A) rows.push_back(rat_vec_json(row));
          obj["A"] = std::move(rows);
          obj["b"] = rat_vec_json(k.b);
          obj["t"] = rat_json(k.t);
        } else {  // PsdIneq
          json mats = json::array();
          for (const SymMat& m : k.mats) mats.push_back(matrix_json(m));
          obj["mats"] = std::move(mats);
          obj["T"] = matrix_json(k.T);
        }
      },
      c);
  return obj;
}

}  // namespace

ProblemFile parse_problem(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("problem file: ") + e.what());
  }
  if (!doc.is_object()) fail("$", "expected a JSON object");
  check_keys(doc, "$", {"box", "mode", "constraints"});

  ProblemFile pf;
  const json& box = field(doc, "$", "box");
  if (!box.is_object()) fail("$.box", "expected an object");
  check_keys(box, "$.box", {"c"});
  const json& c = field(box, "$.box", "c");
  if (c.is_string()) {
    if (c.get<std::string>() != "auto") fail("$.box.c", "expected \"auto\" or an array");
  } else if (c.is_array()) {
    IntVec caps;
    for (std::size_t j = 0; j < c.size(); ++j)
      caps.push_back(get_int(c[j], "$.box.c[" + std::to_string(j) + "]"));
    pf.box_c = std::move(caps);
  } else {
    fail("$.box.c", "expected \"auto\" or an array");
  }

  const json& mode = field(doc, "$", "mode");
  if (!mode.is_string()) fail("$.mode", "expected a string");
  const std::string ms = mode.get<std::string>();
  if (ms == "max_feasible")
    pf.mode = Mode::MaxFeasible;
  else if (ms == "min_feasible")
    pf.mode = Mode::MinFeasible;
  else
    fail("$.mode", "expected \"max_feasible\" or \"min_feasible\"");

  const json& cons = field(doc, "$", "constraints");
  if (!cons.is_array() || cons.empty())
    fail("$.constraints", "expected a nonempty array");
  for (std::size_t i = 0; i < cons.size(); ++i)
    pf.constraints.push_back(
        parse_constraint(cons[i], "$.constraints[" + std::to_string(i) + "]"));
  return pf;
}

std::string serialize_problem(const ProblemFile& pf) {
  json doc;
  if (pf.box_c) {
    json caps = json::array();
    for (const Int& v : *pf.box_c) caps.push_back(v.get_si());
    doc["box"] = {{"c", std::move(caps)}};
  } else {
    doc["box"] = {{"c", "auto"}};
  }
  doc["mode"] = pf.mode == Mode::MaxFeasible ? "max_feasible" : "min_feasible";
  json cons = json::array();
  for (const Constraint& c : pf.constraints) cons.push_back(constraint_json(c));
  doc["constraints"] = std::move(cons);
  return doc.dump(2) + "\n";
}

InequalitySystem instantiate(const ProblemFile& pf) {
  InequalitySystem sys{IntBox{}, pf.constraints, pf.mode};
  for (const Constraint& c : sys.constraints)
    validate_constraint(c, sys.mode == Mode::MinFeasible);
  if (pf.box_c) {
    std::size_t n = 0;
    for (const Constraint& c : sys.constraints) n = std::max(n, constraint_dim(c));
    if (pf.box_c->size() < n)
      throw std::invalid_argument("problem file: box has fewer variables than the constraints");
    sys.box = IntBox(*pf.box_c);
  } else {
    sys.box = derive_box(sys, std::nullopt);
  }
  return sys;
}

std::string format_record(const OutputRecord& r) {
  std::ostringstream os;
  switch (r.tag) {
    case EmissionTag::MaxFeasible: os << "MAX_FEAS"; break;
    case EmissionTag::MinInfeasible: os << "MIN_INFEAS"; break;
    case EmissionTag::MinFeasible: os << "MIN_FEAS"; break;
  }
  for (const Int& v : r.vec) os << ' ' << v.get_str();
  return os.str();
}

OutputRecord parse_record(const std::string& line) {
  std::istringstream is(line);
  std::string tag;
  if (!(is >> tag)) throw std::invalid_argument("output record: empty line");
  OutputRecord r;
  if (tag == "MAX_FEAS")
    r.tag = EmissionTag::MaxFeasible;
  else if (tag == "MIN_INFEAS")
    r.tag = EmissionTag::MinInfeasible;
  else if (tag == "MIN_FEAS")
    r.tag = EmissionTag::MinFeasible;
  else
    throw std::invalid_argument("output record: unknown tag '" + tag + "'");
  std::string tok;
  while (is >> tok) {
    Int v;
    if (mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0)
      throw std::invalid_argument("output record: bad integer '" + tok + "'");
    r.vec.push_back(std::move(v));
  }
  return r;
}

}  // namespace monogen
