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

#include "weham/commands.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "weham/errors.hpp"
#include "weham/flow.hpp"
#include "weham/lie_algebra.hpp"
#include "weham/random.hpp"
#include "weham/splitting.hpp"

namespace weham {

using nlohmann::json;

namespace {

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    cur.erase(0, cur.find_first_not_of(" \t"));
    cur.erase(cur.find_last_not_of(" \t") + 1);
    parts.push_back(cur);
  }
  return parts;
}

double to_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError(what + ": cannot parse number \"" + s + "\"");
  }
}

json to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json columns_to_json(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(to_json(m.col(c)));
  return out;
}

std::string describe_vector(const Vec& v, const LieAlgebra& alg) {
  std::ostringstream os;
  os.precision(12);
  bool first = true;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) == 0.0) continue;
    const double mag = std::abs(v(i));
    os << (first ? (v(i) < 0 ? "-" : "") : (v(i) < 0 ? " - " : " + "));
    if (mag != 1.0) os << mag << "*";
    os << alg.label(static_cast<std::size_t>(i));
    first = false;
  }
  return first ? "0" : os.str();
}

/// Accumulates checks and the exit code for one command.
class Report {
 public:
  Report(const Scenario& s, std::string command) {
    doc_["scenario"] = s.name;
    doc_["command"] = std::move(command);
    doc_["checks"] = json::array();
    doc_["max_errors"] = json::object();
  }

  void check(const std::string& name, bool passed, std::optional<double> value = std::nullopt,
             std::optional<double> tolerance = std::nullopt, const std::string& detail = "") {
    json c = {{"name", name}, {"passed", passed}};
    if (value) c["value"] = *value;
    if (tolerance) c["tolerance"] = *tolerance;
    if (!detail.empty()) c["detail"] = detail;
    doc_["checks"].push_back(std::move(c));
    if (!passed) raise(kExitCheckFailed);
  }

  void skip(const std::string& name, const std::string& reason) {
    doc_["checks"].push_back({{"name", name}, {"passed", nullptr}, {"skipped", reason}});
  }

  void max_error(const std::string& name, double value) {
    auto& m = doc_["max_errors"];
    m[name] = m.contains(name) ? std::max(m[name].get<double>(), value) : value;
  }

  void numerical_failure(const std::string& what) {
    doc_["checks"].push_back({{"name", "numerical"}, {"passed", false}, {"detail", what}});
    raise(kExitNumericalFailure);
  }

  void raise(int code) {
    // 3 dominates 1 dominates 0
    if (code == kExitNumericalFailure || (code == kExitCheckFailed && exit_ == kExitOk)) exit_ = code;
  }

  json& doc() { return doc_; }
  int exit_code() const { return exit_; }

  CommandResult finish() {
    doc_["exit_code"] = exit_;
    return CommandResult{exit_, doc_, std::move(csv_)};
  }

  void add_csv(std::string name, std::string contents) { csv_.emplace_back(std::move(name), std::move(contents)); }

  /// Copies checks and errors of a sub-report under a prefix.
  void merge(const std::string& prefix, const CommandResult& sub) {
    for (auto c : sub.report["checks"]) {
      c["name"] = prefix + "." + c["name"].get<std::string>();
      doc_["checks"].push_back(std::move(c));
    }
    for (const auto& [k, v] : sub.report["max_errors"].items()) max_error(prefix + "." + k, v.get<double>());
    doc_["sections"][prefix] = sub.report;
    doc_["sections"][prefix].erase("checks");
    doc_["sections"][prefix].erase("max_errors");
    raise(sub.exit_code);
    for (const auto& f : sub.csv_files) csv_.push_back(f);
  }

 private:
  json doc_;
  int exit_ = kExitOk;
  std::vector<std::pair<std::string, std::string>> csv_;
};

Eigen::VectorXd point_option(const Scenario& s, const CommandOptions& o) {
  return o.x ? parse_point(*o.x, s.manifold_dim()) : s.base_point();
}

Vec vector_option(const std::optional<std::string>& text, const LieAlgebra& alg, std::size_t fallback) {
  if (text) return parse_algebra_vector(*text, alg);
  return alg.basis_vector(std::min(fallback, alg.dim() - 1));
}

json cocycle_to_json(const CocycleMatrix& c, const std::vector<std::string>& coords) {
  json m = json::array();
  for (std::size_t i = 0; i < c.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < c.dim(); ++j) row.push_back(c(i, j).to_string(coords));
    m.push_back(std::move(row));
  }
  return m;
}

// ---------------------------------------------------------------------------

CommandResult cmd_validate(const Scenario& s, const CommandOptions&) {
  Report r(s, "validate");
  const auto& a = s.action;
  const double tol = s.defaults.tolerances.coefficient;
  const auto jac = validate_jacobi(a.algebra(), tol);
  r.check("lie_algebra_jacobi", jac.ok, jac.max_violation, tol);
  r.max_error("jacobiator", jac.max_violation);
  const auto pj = validate_poisson(a.poisson(), tol);
  r.check("poisson_jacobiator", pj.ok, std::nullopt, tol,
          pj.ok ? "" : "nonzero on coordinate triple (" + std::to_string((*pj.offending_triple)[0]) + "," +
                           std::to_string((*pj.offending_triple)[1]) + "," + std::to_string((*pj.offending_triple)[2]) + ")");
  const auto ar = validate_action(a, tol);
  r.check("action_casimir_valued", ar.ok, std::nullopt, tol,
          ar.ok ? "" : "pair (" + std::to_string(ar.offending_pair->first) + "," + std::to_string(ar.offending_pair->second) + ")");

  const auto sr = structure_report(a.algebra(), s.defaults.tolerances.rank);
  json st = {{"dim", a.algebra().dim()},
             {"center", columns_to_json(sr.center)},
             {"derived", columns_to_json(sr.derived)},
             {"lower_central_dims", sr.lower_central_dims},
             {"is_abelian", sr.is_abelian},
             {"is_two_step", sr.is_two_step},
             {"is_nilpotent", sr.is_nilpotent}};
  if (sr.nilpotency_class) st["nilpotency_class"] = *sr.nilpotency_class;
  r.doc()["algebra"] = st;
  r.doc()["manifold_dim"] = s.manifold_dim();
  return r.finish();
}

CommandResult cmd_cocycle(const Scenario& s, const CommandOptions& o) {
  Report r(s, "cocycle");
  const auto& a = s.action;
  const auto& tol = s.defaults.tolerances;
  const CocycleMatrix c = cocycle(a, tol.coefficient);
  r.doc()["labels"] = a.algebra().labels();
  r.doc()["cocycle"] = cocycle_to_json(c, s.coordinates);

  bool all_casimir = true;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    for (std::size_t j = 0; j < c.dim(); ++j) all_casimir = all_casimir && a.poisson().is_casimir(c(i, j), tol.coefficient);
  }
  r.check("entries_are_casimirs", all_casimir);
  const auto ce = ce_check(a, c, tol.coefficient);
  r.check("ce_closed", ce.ok);
  r.doc()["zero"] = c.is_zero(tol.coefficient);

  if (ce.ok) {
    const auto ex = exactness(a, c, o.degree, 1e-9);
    json e = {{"exact", ex.exact()}, {"degree_bound", o.degree}, {"residual", ex.residual}};
    if (ex.exact()) {
      json w = json::object();
      for (std::size_t k = 0; k < ex.witness->size(); ++k) w[a.algebra().label(k)] = (*ex.witness)[k].to_string(s.coordinates);
      e["witness"] = w;
      e["verified"] = ex.verified;
      r.check("exactness_witness_verified", ex.verified);
    }
    r.doc()["exactness"] = e;
  }

  const Eigen::VectorXd x = point_option(s, o);
  const Eigen::MatrixXd ker = kernel_at(c, x, tol.rank);
  json kernel = json::array();
  for (Eigen::Index col = 0; col < ker.cols(); ++col) kernel.push_back(describe_vector(ker.col(col), a.algebra()));
  r.doc()["kernel"] = {{"point", to_json(x)}, {"basis", columns_to_json(ker)}, {"span", kernel}};
  return r.finish();
}

std::string zeta_csv(const ZetaComparison& cmp) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "s,zeta_numeric,zeta_series,abs_diff\n";
  for (std::size_t k = 0; k < cmp.s.size(); ++k) {
    os << cmp.s[k] << "," << cmp.numeric[k] << "," << cmp.series[k] << "," << cmp.abs_diff[k] << "\n";
  }
  return os.str();
}

CommandResult cmd_zeta(const Scenario& s, const CommandOptions& o) {
  Report r(s, "zeta");
  const auto& alg = s.action.algebra();
  const Vec u = vector_option(o.u, alg, 0);
  const Vec v = vector_option(o.v, alg, 1);
  const Eigen::VectorXd x = point_option(s, o);
  const std::size_t samples = o.samples.value_or(101);
  const auto cmp = compare_zeta(s.action, u, v, x, o.s_min, o.s_max, samples, o.jmax, s.defaults.step);
  const auto series = zeta_series(s.action, u, v, x, o.jmax);
  r.doc()["u"] = describe_vector(u, alg);
  r.doc()["v"] = describe_vector(v, alg);
  r.doc()["x"] = to_json(x);
  r.doc()["series_coefficients"] = series.coeffs;
  r.doc()["truncated"] = series.truncated;
  if (!series.truncated) {
    r.doc()["warning"] = "ad-orbit did not vanish within jmax; series is a partial sum";
  }
  r.max_error("zeta_abs_diff", cmp.max_deviation);
  r.check("series_matches_flow", cmp.max_deviation <= s.defaults.tolerances.flow, cmp.max_deviation,
          s.defaults.tolerances.flow);
  r.add_csv("zeta.csv", zeta_csv(cmp));
  return r.finish();
}

std::optional<SplitConfig> split_config(const Scenario& s, const CommandOptions& o, Report& r) {
  std::optional<Eigen::MatrixXd> sub;
  if (o.subspace) sub = parse_subspace(*o.subspace, s.action.algebra());
  else sub = s.defaults.subspace;
  if (!s.action.algebra().is_abelian()) {
    r.skip("split", "splitting requires an abelian Lie algebra");
    return std::nullopt;
  }
  if (!sub) throw InputError("no subspace given (use --subspace) and the scenario has no default");
  return SplitConfig(s.action, *sub, s.defaults.inner_product.value_or(Eigen::MatrixXd()), s.defaults.step,
                     s.defaults.tolerances.rank);
}

std::vector<Eigen::VectorXd> sample_points(const SplitConfig& cfg, const Scenario& s, SplitMix64& rng,
                                           std::size_t count, double box) {
  std::vector<Eigen::VectorXd> pts;
  const auto n = static_cast<Eigen::Index>(s.manifold_dim());
  std::size_t attempts = 0;
  while (pts.size() < count) {
    if (++attempts > 1000 * (count + 1)) throw NumericalError("could not sample points with a nondegenerate cocycle");
    Eigen::VectorXd y = rng.point_in_box(n, box);
    const auto rc = restrict_cocycle(cfg, y);
    if (!rc.nondegenerate || std::abs(rc.det) < s.defaults.min_abs_det) continue;
    pts.push_back(std::move(y));
  }
  return pts;
}

bool restricted_form_is_constant(const SplitConfig& cfg) {
  const Eigen::MatrixXd& v = cfg.subspace();
  for (Eigen::Index a = 0; a < v.cols(); ++a) {
    for (Eigen::Index b = 0; b < v.cols(); ++b) {
      if (!cfg.cocycle().pair(v.col(a), v.col(b)).is_constant()) return false;
    }
  }
  return true;
}

CommandResult cmd_split(const Scenario& s, const CommandOptions& o) {
  Report r(s, "split");
  const auto cfg = split_config(s, o, r);
  if (!cfg) return r.finish();
  const auto& tol = s.defaults.tolerances;
  SplitMix64 rng(o.seed);
  const std::size_t samples = o.samples.value_or(100);
  const auto pts = sample_points(*cfg, s, rng, samples, o.box.value_or(s.defaults.box));

  double roundtrip = 0.0, landing = 0.0, leaf = 0.0;
  bool dirac = true;
  std::vector<Eigen::VectorXd> n_points;
  for (const auto& y : pts) {
    const SplitPoint sp = split_point(*cfg, y, tol.flow);
    const Eigen::VectorXd back = split_inverse(*cfg, sp.translation.coords, sp.n_point);
    roundtrip = std::max(roundtrip, (back - y).cwiseAbs().maxCoeff());
    landing = std::max(landing, sp.landing_residual);
    dirac = dirac && check_poisson_dirac(*cfg, sp.n_point).ok;
    // Phi moves points along their leaf: restricted cocycle values agree.
    leaf = std::max(leaf, (restrict_cocycle(*cfg, y).matrix - restrict_cocycle(*cfg, sp.n_point).matrix).cwiseAbs().maxCoeff());
    n_points.push_back(sp.n_point);
  }
  r.doc()["subspace"] = columns_to_json(cfg->subspace());
  r.doc()["samples"] = pts.size();
  r.doc()["seed"] = o.seed;
  r.doc()["roundtrip_max"] = roundtrip;
  r.doc()["landing_max"] = landing;
  r.doc()["dirac_ok"] = dirac;
  r.max_error("roundtrip", roundtrip);
  r.max_error("landing", landing);
  r.max_error("leaf_preservation", leaf);
  r.check("roundtrip", roundtrip <= tol.flow, roundtrip, tol.flow);
  r.check("landing_on_N", landing <= tol.flow, landing, tol.flow);
  r.check("leaf_preservation", leaf <= 1e-8, leaf, 1e-8);
  r.check("poisson_dirac", dirac);

  if (restricted_form_is_constant(*cfg)) {
    const std::vector<Eigen::VectorXd> sub(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(20, pts.size())));
    const auto pc = verify_product(*cfg, sub, tol.finite_difference);
    r.doc()["product_max_discrepancy"] = pc.max_discrepancy;
    r.max_error("product_translation_bracket", pc.translation_bracket_max);
    r.max_error("product_cross_bracket", pc.cross_bracket_max);
    r.check("product_structure", pc.max_discrepancy <= tol.finite_difference, pc.max_discrepancy, tol.finite_difference);
  } else {
    r.doc()["product_max_discrepancy"] = nullptr;
    r.skip("product_structure", "restricted cocycle is not constant in the framing");
  }
  return r.finish();
}

CommandResult cmd_residual(const Scenario& s, const CommandOptions& o) {
  Report r(s, "residual");
  const auto& a = s.action;
  const auto& tol = s.defaults.tolerances;
  const CocycleMatrix c = cocycle(a, tol.coefficient);
  if (!c.is_constant(tol.coefficient)) {
    r.check("constant_cocycle", false, std::nullopt, std::nullopt, "unsupported: cocycle is not constant");
    return r.finish();
  }
  const ResidualAction res = residual_action(a, c, s.defaults.inner_product.value_or(Eigen::MatrixXd()), tol.rank);
  json k = json::array(), v = json::array(), eqs = json::array(), hams = json::array();
  for (Eigen::Index i = 0; i < res.kernel.cols(); ++i) k.push_back(describe_vector(res.kernel.col(i), a.algebra()));
  for (Eigen::Index i = 0; i < res.complement.cols(); ++i) v.push_back(describe_vector(res.complement.col(i), a.algebra()));
  for (const auto& p : res.slice_equations) eqs.push_back(p.to_string(s.coordinates) + " = 0");
  for (const auto& p : res.hamiltonians) hams.push_back(p.to_string(s.coordinates));
  r.doc()["kernel"] = k;
  r.doc()["complement"] = v;
  r.doc()["N"] = eqs.empty() ? json("M") : eqs;
  r.doc()["residual_hamiltonians"] = hams;
  r.doc()["residual_cocycle"] = cocycle_to_json(res.residual_cocycle, s.coordinates);
  r.check("residual_cocycle_zero", res.hamiltonian);

  if (res.complement.cols() > 0) {
    SplitConfig cfg(a, res.complement, s.defaults.inner_product.value_or(Eigen::MatrixXd()), s.defaults.step, tol.rank);
    SplitMix64 rng(o.seed);
    const auto pts = sample_points(cfg, s, rng, o.samples.value_or(20), o.box.value_or(s.defaults.box));
    double drift = 0.0;
    for (const auto& y : pts) {
      const auto sp = split_point(cfg, y, tol.flow);
      for (const auto& h : res.hamiltonians) drift = std::max(drift, std::abs(h.evaluate(sp.n_point) - h.evaluate(y)));
    }
    r.max_error("residual_hamiltonian_on_N", drift);
    r.check("residual_hamiltonians_invariant", drift <= 1e-9, drift, 1e-9);
  }
  return r.finish();
}

CommandResult cmd_orbit(const Scenario& s, const CommandOptions& o) {
  Report r(s, "orbit-check");
  const auto& alg = s.action.algebra();
  const Vec u = vector_option(o.u, alg, 0);
  const Vec v = vector_option(o.v, alg, 1);
  const Eigen::VectorXd x = point_option(s, o);
  const auto oc = orbit_levelset_check(s.action, u, v, x, o.orbit_time, o.orbit_steps, o.jmax);
  if (oc.blew_up) throw NumericalError("orbit integration blew up");
  json fns = json::array();
  double max_var = 0.0;
  for (std::size_t j = 0; j < oc.coefficient_functions.size(); ++j) {
    fns.push_back({{"j", j + 1},
                   {"function", oc.coefficient_functions[j].to_string(s.coordinates)},
                   {"value_at_x0", oc.initial_values[j]},
                   {"variation", oc.variations[j]}});
    max_var = std::max(max_var, oc.variations[j]);
  }
  r.doc()["u"] = describe_vector(u, alg);
  r.doc()["v"] = describe_vector(v, alg);
  r.doc()["x0"] = to_json(x);
  r.doc()["T"] = o.orbit_time;
  r.doc()["coefficients"] = fns;
  r.doc()["truncated"] = oc.truncated;
  r.doc()["hamiltonian_variation"] = oc.hamiltonian_variation;
  const bool constant = max_var <= s.defaults.tolerances.flow;
  r.doc()["coefficients_constant_on_orbit"] = constant;
  // First nonvanishing coefficient at x0 forces zeta to be a nonconstant
  // polynomial, so the orbit cannot be periodic.
  bool nonconstant_zeta = false;
  for (double a : oc.initial_values) nonconstant_zeta = nonconstant_zeta || std::abs(a) > s.defaults.tolerances.flow;
  r.doc()["orbit_can_be_periodic"] = !(oc.truncated && nonconstant_zeta);
  r.max_error("coefficient_variation", max_var);
  return r.finish();
}

template <typename F>
CommandResult guarded(const Scenario& s, const std::string& name, F&& f) {
  try {
    return f();
  } catch (const NumericalError& e) {
    Report r(s, name);
    r.numerical_failure(e.what());
    return r.finish();
  } catch (const ValidationError& e) {
    Report r(s, name);
    r.check("validation", false, std::nullopt, std::nullopt, e.what());
    return r.finish();
  }
}

CommandResult cmd_report(const Scenario& s, const CommandOptions& o) {
  Report r(s, "report");
  r.merge("validate", guarded(s, "validate", [&] { return cmd_validate(s, o); }));
  r.merge("cocycle", guarded(s, "cocycle", [&] { return cmd_cocycle(s, o); }));
  if (s.action.dim() >= 2) r.merge("zeta", guarded(s, "zeta", [&] { return cmd_zeta(s, o); }));
  const bool abelian = s.action.algebra().is_abelian();
  if (abelian && (o.subspace || s.defaults.subspace)) {
    r.merge("split", guarded(s, "split", [&] { return cmd_split(s, o); }));
  } else {
    r.skip("split", abelian ? "no subspace configured" : "splitting requires an abelian Lie algebra");
  }
  const CocycleMatrix c = raw_cocycle(s.action);
  if (c.is_constant(s.defaults.tolerances.coefficient) && (abelian || c.is_zero(s.defaults.tolerances.coefficient))) {
    r.merge("residual", guarded(s, "residual", [&] { return cmd_residual(s, o); }));
  } else {
    r.skip("residual", abelian ? "cocycle is not constant" : "non-abelian algebra with nonzero cocycle");
  }
  if (!abelian && s.action.dim() >= 2) {
    r.merge("orbit-check", guarded(s, "orbit-check", [&] { return cmd_orbit(s, o); }));
  }
  return r.finish();
}

}  // namespace

Vec parse_algebra_vector(const std::string& text, const LieAlgebra& alg) {
  if (auto idx = alg.index_of(text)) return alg.basis_vector(*idx);
  const auto parts = split_on(text, ',');
  if (parts.size() == 1) {
    const double d = to_double(parts[0], "algebra vector");
    if (d < 0 || d != std::floor(d) || d >= static_cast<double>(alg.dim())) {
      throw InputError("basis index " + text + " out of range");
    }
    return alg.basis_vector(static_cast<std::size_t>(d));
  }
  if (parts.size() != alg.dim()) {
    throw InputError("algebra vector \"" + text + "\" needs " + std::to_string(alg.dim()) + " coordinates");
  }
  Vec v(static_cast<Eigen::Index>(alg.dim()));
  for (std::size_t i = 0; i < parts.size(); ++i) v(static_cast<Eigen::Index>(i)) = to_double(parts[i], "algebra vector");
  return v;
}

Eigen::MatrixXd parse_subspace(const std::string& text, const LieAlgebra& alg) {
  std::vector<Vec> cols;
  if (text.find(';') != std::string::npos) {
    for (const auto& part : split_on(text, ';')) {
      if (!part.empty()) cols.push_back(parse_algebra_vector(part, alg));
    }
  } else {
    for (const auto& part : split_on(text, ',')) {
      if (auto idx = alg.index_of(part)) {
        cols.push_back(alg.basis_vector(*idx));
        continue;
      }
      const double d = to_double(part, "subspace index");
      if (d < 0 || d != std::floor(d) || d >= static_cast<double>(alg.dim())) throw InputError("subspace index " + part + " out of range");
      cols.push_back(alg.basis_vector(static_cast<std::size_t>(d)));
    }
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(alg.dim()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) m.col(static_cast<Eigen::Index>(c)) = cols[c];
  return m;
}

Eigen::VectorXd parse_point(const std::string& text, std::size_t dim) {
  const auto parts = split_on(text, ',');
  if (parts.size() != dim) throw InputError("point \"" + text + "\" needs " + std::to_string(dim) + " coordinates");
  Eigen::VectorXd x(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) x(static_cast<Eigen::Index>(i)) = to_double(parts[i], "point");
  return x;
}

CommandResult run_command(const std::string& command, const Scenario& scenario, const CommandOptions& options) {
  if (command == "validate") return guarded(scenario, command, [&] { return cmd_validate(scenario, options); });
  if (command == "cocycle") return guarded(scenario, command, [&] { return cmd_cocycle(scenario, options); });
  if (command == "zeta") return guarded(scenario, command, [&] { return cmd_zeta(scenario, options); });
  if (command == "split") return guarded(scenario, command, [&] { return cmd_split(scenario, options); });
  if (command == "residual") return guarded(scenario, command, [&] { return cmd_residual(scenario, options); });
  if (command == "orbit-check") return guarded(scenario, command, [&] { return cmd_orbit(scenario, options); });
  if (command == "report") return cmd_report(scenario, options);
  throw InputError("unknown command \"" + command + "\"");
}

}  // namespace weham
