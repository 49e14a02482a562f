// Copyright 2026 The weham Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "weham/scenario.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "weham/errors.hpp"
#include "weham/lie_algebra.hpp"
#include "weham/poisson.hpp"

namespace weham {

using nlohmann::json;

Eigen::VectorXd Scenario::base_point() const {
  if (defaults.base_point) return *defaults.base_point;
  return Eigen::VectorXd::Ones(static_cast<Eigen::Index>(manifold_dim()));
}

namespace {

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing field \"" + key + "\"");
  return *it;
}

std::size_t as_index(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

double as_double(const json& j, const std::string& where) {
  if (!j.is_number()) throw InputError(where + ": expected a number");
  return j.get<double>();
}

Eigen::VectorXd as_vector(const json& j, const std::string& where, std::optional<std::size_t> len = std::nullopt) {
  if (!j.is_array()) throw InputError(where + ": expected an array of numbers");
  if (len && j.size() != *len) {
    throw InputError(where + ": expected " + std::to_string(*len) + " entries, got " + std::to_string(j.size()));
  }
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = as_double(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

json vector_to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

LieAlgebra parse_algebra(const json& j, const std::string& where) {
  const std::size_t dim = as_index(field(j, "dim", where), where + ".dim");
  std::vector<std::string> labels;
  if (auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array()) throw InputError(where + ".labels: expected an array of strings");
    for (const auto& l : *it) labels.push_back(l.get<std::string>());
  }
  std::vector<LieAlgebra::BasisBracket> brackets;
  if (auto it = j.find("brackets"); it != j.end()) {
    if (!it->is_array()) throw InputError(where + ".brackets: expected an array");
    for (std::size_t r = 0; r < it->size(); ++r) {
      const std::string w = where + ".brackets[" + std::to_string(r) + "]";
      const json& rec = (*it)[r];
      const std::size_t i = as_index(field(rec, "i", w), w + ".i");
      const std::size_t jj = as_index(field(rec, "j", w), w + ".j");
      if (i >= jj) throw InputError(w + ": requires i < j");
      brackets.push_back({i, jj, as_vector(field(rec, "coords", w), w + ".coords", dim)});
    }
  }
  try {
    return LieAlgebra(dim, brackets, labels);
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

json algebra_to_json(const LieAlgebra& alg) {
  json brackets = json::array();
  for (const auto& b : alg.nonzero_brackets()) brackets.push_back({{"i", b.i}, {"j", b.j}, {"coords", vector_to_json(b.coords)}});
  return {{"dim", alg.dim()}, {"labels", alg.labels()}, {"brackets", brackets}};
}

void require_jacobi(const LieAlgebra& alg, const std::string& where) {
  if (auto rep = validate_jacobi(alg); !rep.ok) {
    const auto& t = *rep.offending_triple;
    throw ValidationError(where + ": Jacobi identity fails at basis triple (" + std::to_string(t[0]) + "," +
                          std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
  }
}

PoissonStructure parse_poisson(const json& j, const LieAlgebra& scenario_algebra, std::size_t nvars,
                               const std::string& where) {
  const json& type = field(j, "type", where);
  if (!type.is_string()) throw InputError(where + ".type: expected a string");
  const auto t = type.get<std::string>();
  if (t == "constant_symplectic") {
    const std::size_t pairs = as_index(field(j, "pairs", where), where + ".pairs");
    if (pairs < 1) throw InputError(where + ".pairs: must be at least 1");
    return PoissonStructure::constant_symplectic(pairs);
  }
  if (t == "lie_poisson") {
    if (auto it = j.find("lie_algebra"); it != j.end()) {
      LieAlgebra alg = parse_algebra(*it, where + ".lie_algebra");
      require_jacobi(alg, where + ".lie_algebra");
      return PoissonStructure::lie_poisson(alg);
    }
    return PoissonStructure::lie_poisson(scenario_algebra);
  }
  if (t == "matrix") {
    const json& entries = field(j, "entries", where);
    if (!entries.is_array()) throw InputError(where + ".entries: expected an array");
    std::vector<PoissonStructure::Entry> out;
    for (std::size_t r = 0; r < entries.size(); ++r) {
      const std::string w = where + ".entries[" + std::to_string(r) + "]";
      const std::size_t i = as_index(field(entries[r], "i", w), w + ".i");
      const std::size_t jj = as_index(field(entries[r], "j", w), w + ".j");
      if (i >= jj) throw InputError(w + ": entries must have i < j; the lower triangle is implied by antisymmetry");
      if (jj >= nvars) throw InputError(w + ": index out of range");
      out.push_back({i, jj, polynomial_from_json(field(entries[r], "poly", w), nvars, w + ".poly")});
    }
    try {
      return PoissonStructure(nvars, out);
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + ".type: unknown Poisson structure type \"" + t + "\"");
}

Eigen::MatrixXd as_column_matrix(const json& j, std::size_t rows, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of vectors");
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(j.size()));
  for (std::size_t c = 0; c < j.size(); ++c) m.col(static_cast<Eigen::Index>(c)) = as_vector(j[c], where + "[" + std::to_string(c) + "]", rows);
  return m;
}

json column_matrix_to_json(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(vector_to_json(m.col(c)));
  return out;
}

}  // namespace

json polynomial_to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& [exp, c] : p.terms()) out.push_back({{"coeff", c}, {"exp", exp}});
  return out;
}

Polynomial polynomial_from_json(const json& j, std::size_t nvars, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected a list of {coeff, exp} terms");
  std::vector<std::pair<Exponent, double>> terms;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string w = where + "[" + std::to_string(t) + "]";
    const double c = as_double(field(j[t], "coeff", w), w + ".coeff");
    const json& e = field(j[t], "exp", w);
    if (!e.is_array() || e.size() != nvars) throw InputError(w + ".exp: expected " + std::to_string(nvars) + " exponents");
    Exponent exp;
    for (std::size_t k = 0; k < e.size(); ++k) exp.push_back(static_cast<unsigned>(as_index(e[k], w + ".exp")));
    terms.emplace_back(std::move(exp), c);
  }
  return Polynomial(nvars, terms);
}

Scenario parse_scenario(const json& doc, const std::string& source) {
  const std::string& w = source;
  const std::string name = doc.value("name", std::string("unnamed"));
  const std::size_t nvars = as_index(field(doc, "manifold_dim", w), w + ".manifold_dim");
  LieAlgebra alg = parse_algebra(field(doc, "lie_algebra", w), w + ".lie_algebra");
  PoissonStructure poisson = parse_poisson(field(doc, "poisson", w), alg, nvars, w + ".poisson");
  if (poisson.nvars() != nvars) {
    throw InputError(w + ".poisson: structure lives on R^" + std::to_string(poisson.nvars()) + " but manifold_dim is " +
                     std::to_string(nvars));
  }
  const json& hams = field(field(doc, "action", w), "hamiltonians", w + ".action");
  if (!hams.is_array() || hams.size() != alg.dim()) {
    throw InputError(w + ".action.hamiltonians: expected " + std::to_string(alg.dim()) + " polynomials");
  }
  std::vector<Polynomial> hs;
  for (std::size_t i = 0; i < hams.size(); ++i) {
    hs.push_back(polynomial_from_json(hams[i], nvars, w + ".action.hamiltonians[" + std::to_string(i) + "]"));
  }

  ScenarioDefaults defaults;
  if (auto it = doc.find("defaults"); it != doc.end()) {
    const std::string dw = w + ".defaults";
    const json& d = *it;
    if (auto s = d.find("subspace"); s != d.end()) defaults.subspace = as_column_matrix(*s, alg.dim(), dw + ".subspace");
    if (auto s = d.find("inner_product"); s != d.end()) {
      Eigen::MatrixXd g = as_column_matrix(*s, alg.dim(), dw + ".inner_product");
      if (g.cols() != static_cast<Eigen::Index>(alg.dim())) throw InputError(dw + ".inner_product: expected an n x n matrix");
      defaults.inner_product = g;
    }
    if (auto s = d.find("base_point"); s != d.end()) defaults.base_point = as_vector(*s, dw + ".base_point", nvars);
    if (auto s = d.find("step"); s != d.end()) defaults.step = as_double(*s, dw + ".step");
    if (auto s = d.find("box"); s != d.end()) defaults.box = as_double(*s, dw + ".box");
    if (auto s = d.find("min_abs_det"); s != d.end()) defaults.min_abs_det = as_double(*s, dw + ".min_abs_det");
    if (auto s = d.find("tolerances"); s != d.end()) {
      auto& t = defaults.tolerances;
      const std::string tw = dw + ".tolerances";
      if (auto x = s->find("coefficient"); x != s->end()) t.coefficient = as_double(*x, tw + ".coefficient");
      if (auto x = s->find("rank"); x != s->end()) t.rank = as_double(*x, tw + ".rank");
      if (auto x = s->find("flow"); x != s->end()) t.flow = as_double(*x, tw + ".flow");
      if (auto x = s->find("finite_difference"); x != s->end()) t.finite_difference = as_double(*x, tw + ".finite_difference");
    }
    if (!(defaults.step > 0.0)) throw InputError(dw + ".step: must be positive");
  }

  std::vector<std::string> coords;
  if (auto it = doc.find("coordinates"); it != doc.end()) {
    if (!it->is_array() || it->size() != nvars) throw InputError(w + ".coordinates: expected " + std::to_string(nvars) + " names");
    for (const auto& c : *it) coords.push_back(c.get<std::string>());
  } else {
    for (std::size_t i = 0; i < nvars; ++i) coords.push_back("x" + std::to_string(i + 1));
  }

  // Eager structural validation.
  require_jacobi(alg, w + ".lie_algebra");
  if (auto rep = validate_poisson(poisson, defaults.tolerances.coefficient); !rep.ok) {
    const auto& t = *rep.offending_triple;
    throw ValidationError(w + ".poisson: Jacobiator does not vanish on coordinates (" + std::to_string(t[0]) + "," +
                          std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
  }
  WeaklyHamiltonianAction action(std::move(alg), std::move(poisson), std::move(hs));
  if (auto rep = validate_action(action, defaults.tolerances.coefficient); !rep.ok) {
    const auto [i, j] = *rep.offending_pair;
    throw ValidationError(w + ".action: {H_" + action.algebra().label(i) + ", H_" + action.algebra().label(j) +
                          "} - H_[" + action.algebra().label(i) + "," + action.algebra().label(j) +
                          "] is not a Casimir (pair " + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return Scenario{name, std::move(action), std::move(coords), defaults};
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open scenario file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  try {
    return parse_scenario(doc, path);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

json scenario_to_json(const Scenario& s) {
  const auto& a = s.action;
  json entries = json::array();
  for (const auto& e : a.poisson().nonzero_entries()) {
    entries.push_back({{"i", e.i}, {"j", e.j}, {"poly", polynomial_to_json(e.value)}});
  }
  json hams = json::array();
  for (const auto& h : a.hamiltonians()) hams.push_back(polynomial_to_json(h));
  json defaults = {{"step", s.defaults.step},
                   {"box", s.defaults.box},
                   {"min_abs_det", s.defaults.min_abs_det},
                   {"tolerances",
                    {{"coefficient", s.defaults.tolerances.coefficient},
                     {"rank", s.defaults.tolerances.rank},
                     {"flow", s.defaults.tolerances.flow},
                     {"finite_difference", s.defaults.tolerances.finite_difference}}}};
  if (s.defaults.subspace) defaults["subspace"] = column_matrix_to_json(*s.defaults.subspace);
  if (s.defaults.inner_product) defaults["inner_product"] = column_matrix_to_json(*s.defaults.inner_product);
  if (s.defaults.base_point) defaults["base_point"] = vector_to_json(*s.defaults.base_point);
  return {{"name", s.name},
          {"manifold_dim", s.manifold_dim()},
          {"coordinates", s.coordinates},
          {"lie_algebra", algebra_to_json(a.algebra())},
          {"poisson", {{"type", "matrix"}, {"entries", entries}}},
          {"action", {{"hamiltonians", hams}}},
          {"defaults", defaults}};
}

// ---------------------------------------------------------------------------
// Catalog

LieAlgebra heisenberg_algebra() {
  return LieAlgebra(3, {{0, 1, Vec::Unit(3, 2)}}, {"X", "Y", "Z"});
}

LieAlgebra a65a_algebra(double a) {
  return LieAlgebra(6,
                    {{0, 2, Vec::Unit(6, 4)},
                     {0, 3, Vec::Unit(6, 5)},
                     {1, 2, a * Vec::Unit(6, 5)},
                     {1, 3, Vec::Unit(6, 4)}});
}

namespace {

std::string format_param(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Scenario translations(std::size_t d, std::string name) {
  const std::size_t n = 2 * d;
  std::vector<std::string> coords;
  for (std::size_t i = 0; i < d; ++i) coords.push_back("q" + std::to_string(i + 1));
  for (std::size_t i = 0; i < d; ++i) coords.push_back("p" + std::to_string(i + 1));
  // H_u is the linear function with dH_u = iota_u sigma: p_i for the q-directions,
  // -q_i for the p-directions, so that c = sigma.
  std::vector<Polynomial> hs;
  for (std::size_t i = 0; i < d; ++i) hs.push_back(Polynomial::coordinate(n, d + i));
  for (std::size_t i = 0; i < d; ++i) hs.push_back(Polynomial::coordinate(n, i, -1.0));
  WeaklyHamiltonianAction action(LieAlgebra::abelian(n), PoissonStructure::constant_symplectic(d), hs);
  ScenarioDefaults def;
  const auto nn = static_cast<Eigen::Index>(n);
  def.subspace = Eigen::MatrixXd::Identity(nn, nn);
  Eigen::VectorXd base(nn);
  for (Eigen::Index i = 0; i < nn; ++i) base(i) = static_cast<double>(i + 1);
  def.base_point = base;
  return Scenario{std::move(name), std::move(action), coords, def};
}

Scenario galilean(double m) {
  const std::size_t n = 6;
  std::vector<Polynomial> hs;
  for (std::size_t i = 0; i < 3; ++i) hs.push_back(Polynomial::coordinate(n, i, m));      // boosts m q_i
  for (std::size_t i = 0; i < 3; ++i) hs.push_back(Polynomial::coordinate(n, 3 + i));     // translations p_i
  WeaklyHamiltonianAction action(LieAlgebra::abelian(6, {"B1", "B2", "B3", "T1", "T2", "T3"}),
                                 PoissonStructure::constant_symplectic(3), hs);
  ScenarioDefaults def;
  def.subspace = Eigen::MatrixXd::Identity(6, 6);
  def.base_point = (Eigen::VectorXd(6) << 1.0, 2.0, 3.0, 0.5, -1.0, 0.25).finished();
  return Scenario{"galilean(" + format_param(m) + ")", std::move(action), {"q1", "q2", "q3", "p1", "p2", "p3"}, def};
}

Scenario a65a(double a) {
  const std::size_t n = 6;
  std::vector<Polynomial> hs;
  for (std::size_t i = 0; i < 4; ++i) hs.push_back(Polynomial::coordinate(n, i));
  WeaklyHamiltonianAction action(LieAlgebra::abelian(4), PoissonStructure::lie_poisson(a65a_algebra(a)), hs);
  ScenarioDefaults def;
  def.subspace = Eigen::MatrixXd::Identity(4, 4);
  def.base_point = (Eigen::VectorXd(6) << 0.3, -0.2, 0.5, 0.1, 1.0, 0.0).finished();
  def.min_abs_det = 0.25;
  return Scenario{"a65a(" + format_param(a) + ")", std::move(action), {"x1", "x2", "x3", "x4", "x5", "x6"}, def};
}

Scenario heisenberg(bool shifted) {
  LieAlgebra alg = heisenberg_algebra();
  PoissonStructure poisson = PoissonStructure::lie_poisson(alg);
  std::vector<Polynomial> hs;
  for (std::size_t i = 0; i < 3; ++i) hs.push_back(Polynomial::coordinate(3, i));
  if (shifted) hs[2] += Polynomial::constant(3, 1.0);
  WeaklyHamiltonianAction action(std::move(alg), std::move(poisson), hs);
  ScenarioDefaults def;
  def.base_point = (Eigen::VectorXd(3) << 1.0, 0.0, 2.0).finished();
  return Scenario{shifted ? "heisenberg-shifted" : "heisenberg-coadjoint", std::move(action), {"x", "y", "z"}, def};
}

Scenario partial_kernel() {
  // coordinates (q1, q2, p1, p2); H = (q1, p1, q2)
  const std::size_t n = 4;
  std::vector<Polynomial> hs = {Polynomial::coordinate(n, 0), Polynomial::coordinate(n, 2), Polynomial::coordinate(n, 1)};
  WeaklyHamiltonianAction action(LieAlgebra::abelian(3), PoissonStructure::constant_symplectic(2), hs);
  ScenarioDefaults def;
  def.subspace = Eigen::MatrixXd::Identity(3, 2);
  def.base_point = (Eigen::VectorXd(4) << 0.5, 1.0, -0.5, 2.0).finished();
  return Scenario{"partial-kernel-r4", std::move(action), {"q1", "q2", "p1", "p2"}, def};
}

double parse_number(const std::string& s, const std::string& spec) {
  std::string body = s;
  if (auto eq = body.find('='); eq != std::string::npos) body = body.substr(eq + 1);
  try {
    std::size_t used = 0;
    double v = std::stod(body, &used);
    if (used != body.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw InputError("builtin " + spec + ": cannot parse parameter \"" + s + "\"");
  }
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"translations-r2",      "translations-r2n",   "galilean",         "a65a",
          "heisenberg-coadjoint", "heisenberg-shifted", "partial-kernel-r4"};
}

Scenario builtin(const std::string& spec) {
  std::string name = spec;
  std::optional<std::string> param;
  if (auto open = spec.find('('); open != std::string::npos) {
    if (spec.back() != ')') throw InputError("builtin " + spec + ": missing ')'");
    name = spec.substr(0, open);
    param = spec.substr(open + 1, spec.size() - open - 2);
  }
  auto no_param = [&] {
    if (param) throw InputError("builtin " + name + " takes no parameter");
  };
  if (name == "translations-r2") {
    no_param();
    return translations(1, "translations-r2");
  }
  if (name == "translations-r2n") {
    const double d = param ? parse_number(*param, spec) : 1.0;
    if (d < 1 || d != std::floor(d)) throw InputError("builtin " + spec + ": d must be a positive integer");
    return translations(static_cast<std::size_t>(d), "translations-r2n(" + format_param(d) + ")");
  }
  if (name == "galilean") return galilean(param ? parse_number(*param, spec) : 1.0);
  if (name == "a65a") return a65a(param ? parse_number(*param, spec) : -1.0);
  if (name == "heisenberg-coadjoint") {
    no_param();
    return heisenberg(false);
  }
  if (name == "heisenberg-shifted") {
    no_param();
    return heisenberg(true);
  }
  if (name == "partial-kernel-r4") {
    no_param();
    return partial_kernel();
  }
  throw InputError("unknown builtin scenario \"" + spec + "\"");
}

}  // namespace weham
