/*
 * Copyright 2026 The hhoforms Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include "hho/catalog.hpp"
#include "hho/diagnostics.hpp"
#include "hho/error.hpp"
#include "hho/hydro.hpp"
#include "hho/json_io.hpp"
#include "hho/operator.hpp"
#include "hho/random.hpp"

namespace {

using hho::Json;

enum Exit { kPass = 0, kMathFailure = 1, kInputError = 2 };

struct RunConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 20;
  std::int64_t range = 10;
  std::string mode = "exact";
  unsigned digits = 50;
  std::string output = "text";
};

class InputError : public hho::Error {
 public:
  using hho::Error::Error;
};

hho::ParamValues parse_params(const std::string& text) {
  hho::ParamValues out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("--params expects name=value pairs, got \"" + item + "\"");
    std::string name = item.substr(0, eq);
    if (name.size() > 1 && name[0] == 'l' && std::isdigit(static_cast<unsigned char>(name[1]))) {
      name = "lambda" + name.substr(1);
    }
    out[name] = hho::parse_rational(item.substr(eq + 1));
  }
  return out;
}

bool is_catalog_id(const std::string& s) {
  for (const auto& e : hho::catalog_entries()) {
    if (e.id == s) return true;
  }
  return false;
}

// A path to an operator JSON file, or a catalog id.
hho::Hho2 load_operator(const std::string& source, const hho::ParamValues& params) {
  if (!std::filesystem::exists(source) && is_catalog_id(source)) return hho::build(source, params);
  return hho::operator_from_json(hho::read_json_file(source));
}

hho::SamplingConfig sampling(const RunConfig& cfg) {
  hho::SamplingConfig s;
  s.range = cfg.range;
  return s;
}

Json strings(const std::vector<std::string>& v) {
  Json j = Json::array();
  for (const auto& s : v) j.push_back(s);
  return j;
}

Json point_json(const hho::RationalVector& u) { return hho::vector_json(u); }

std::string point_text(const hho::RationalVector& u) {
  std::string s = "(";
  for (std::size_t k = 0; k < u.size(); ++k) s += (k ? ", " : "") + hho::to_string(u[k]);
  return s + ")";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void emit(const RunConfig& cfg, const Json& report, const std::string& text) {
  if (cfg.output == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

// ---------------------------------------------------------------------------
// catalog

int cmd_catalog_list(const RunConfig& cfg) {
  Json list = Json::array();
  std::ostringstream text;
  for (const auto& e : hho::catalog_entries()) {
    Json j;
    j["id"] = e.id;
    j["n"] = e.n;
    j["title"] = e.title;
    j["parameters"] = strings(e.parameters);
    j["degenerate"] = e.degenerate;
    list.push_back(std::move(j));
    text << e.id << "\tn=" << e.n << "\t" << e.title << (e.degenerate ? "\t[degenerate]" : "") << "\n";
  }
  const auto& s = hho::catalog_summary();
  Json report;
  report["entries"] = std::move(list);
  report["summary"] = {{"nondegenerate_n2", s.nondegenerate_n2},
                       {"nondegenerate_n6", s.nondegenerate_n6},
                       {"nondegenerate_n8_total", s.nondegenerate_n8_total},
                       {"n8_instantiable", strings(s.n8_instantiable)}};
  text << hho::catalog_entries().size() << " entries; n=8 classes in total: " << s.nondegenerate_n8_total << "\n";
  emit(cfg, report, text.str());
  return kPass;
}

int cmd_catalog_show(const RunConfig& cfg, const std::string& id, const hho::ParamValues& params) {
  const auto& e = hho::catalog_entry(id);
  const bool instantiated = e.parameters.empty() || !params.empty();
  std::vector<std::string> rows;
  if (instantiated && !e.parameters.empty()) {
    const hho::PolyMatrix d = hho::catalog_display(e, params);
    for (std::size_t i = 0; i < d.dim(); ++i) {
      for (std::size_t j = 0; j < d.dim(); ++j) rows.push_back(d(i, j).to_string());
    }
  } else {
    rows = e.display;
  }
  std::optional<std::string> det;
  if (instantiated) {
    const hho::Hho2 op = hho::build(id, params);
    det = (op.pfaffian() * op.pfaffian()).to_string();
  }
  Json report;
  report["id"] = e.id;
  report["n"] = e.n;
  report["title"] = e.title;
  report["parameters"] = strings(e.parameters);
  Json grid = Json::array();
  for (std::size_t i = 0; i < e.n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < e.n; ++j) row.push_back(rows[i * e.n + j]);
    grid.push_back(std::move(row));
  }
  report["matrix"] = grid;
  report["det"] = det ? Json(*det) : Json(nullptr);
  report["expected_det"] = e.expected_det ? Json(*e.expected_det) : Json(nullptr);
  report["degenerate"] = e.degenerate;
  report["notes"] = e.notes;

  std::ostringstream text;
  text << e.id << " (n = " << e.n << "): " << e.title << "\n";
  std::vector<std::size_t> width(e.n, 0);
  for (std::size_t i = 0; i < e.n; ++i) {
    for (std::size_t j = 0; j < e.n; ++j) width[j] = std::max(width[j], rows[i * e.n + j].size());
  }
  for (std::size_t i = 0; i < e.n; ++i) {
    text << "  [";
    for (std::size_t j = 0; j < e.n; ++j) {
      const auto& s = rows[i * e.n + j];
      text << (j ? "  " : " ") << std::string(width[j] - s.size(), ' ') << s;
    }
    text << " ]\n";
  }
  if (det) text << "det g = " << *det << "\n";
  if (e.expected_det) text << "expected det g = " << *e.expected_det << "\n";
  if (e.degenerate) text << "degenerate: Pf(g) = 0\n";
  if (!e.notes.empty()) text << "notes: " << e.notes << "\n";
  emit(cfg, report, text.str());
  return kPass;
}

int cmd_catalog_export(const std::string& id, const hho::ParamValues& params) {
  std::cout << hho::operator_json(hho::build(id, params), params).dump(2) << "\n";
  return kPass;
}

// ---------------------------------------------------------------------------
// op

int cmd_op_validate(const RunConfig& cfg, const hho::Hho2& op) {
  const auto r = hho::validate(op);
  Json report;
  report["n"] = op.n();
  report["tensor_skew"] = r.tensor_skew;
  report["g0_skew"] = r.g0_skew;
  report["pfaffian"] = r.pfaffian.to_string();
  report["degenerate"] = r.degenerate;
  report["pass"] = r.ok();
  std::ostringstream text;
  text << "n = " << op.n() << "\n"
       << "T totally skew: " << yes_no(r.tensor_skew) << "\n"
       << "g0 skew: " << yes_no(r.g0_skew) << "\n"
       << "Pf(g) = " << r.pfaffian.to_string() << "\n"
       << (r.degenerate ? "degenerate\n" : "nondegenerate\n");
  emit(cfg, report, text.str());
  return r.ok() ? kPass : kMathFailure;
}

hho::LinearMap load_sl(const std::string& path, std::size_t dim) {
  const hho::QMatrix m = hho::matrix_from_json(hho::read_json_file(path), "");
  if (m.rows() != dim || m.cols() != dim) {
    throw InputError(path + ": expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
  }
  hho::LinearMap a(m);
  if (!a.is_special()) throw InputError(path + ": determinant is " + hho::to_string(a.determinant()) + ", not 1");
  return a;
}

int cmd_op_transform(const hho::Hho2& op, const std::string& sl) {
  const auto a = load_sl(sl, op.n() + 1);
  std::cout << hho::operator_json(hho::transform(op, a)).dump(2) << "\n";
  return kPass;
}

int cmd_op_conformal(const RunConfig& cfg, const hho::Hho2& op, const std::string& sl, std::size_t count) {
  const auto a = load_sl(sl, op.n() + 1);
  const hho::MultiPoly A = hho::affine_factor(a);
  hho::Rng rng(cfg.seed);
  const auto s = sampling(cfg);
  Json points = Json::array();
  std::ostringstream text;
  bool all = true;
  std::size_t retries = 0;
  while (points.size() < count) {
    auto u = hho::random_point(rng, op.n(), s);
    if (sgn(A.evaluate(u)) == 0) {
      if (++retries > s.max_retries) throw hho::DomainError("no sample point avoids the pole A = 0");
      continue;
    }
    retries = 0;
    const auto c = hho::conformal_check(op, a, u);
    all = all && c.ok();
    points.push_back({{"u", point_json(u)},
                      {"A", hho::rational_json(c.factor)},
                      {"identity", c.identity_holds},
                      {"pfaffian", c.pfaffian_holds},
                      {"jacobian_det", c.jacobian_det_holds}});
    text << point_text(u) << "  A = " << hho::to_string(c.factor) << "  " << (c.ok() ? "ok" : "FAIL") << "\n";
  }
  Json report;
  report["seed"] = cfg.seed;
  report["points"] = std::move(points);
  report["pass"] = all;
  text << (all ? "conformal identity holds at all points\n" : "conformal identity FAILED\n");
  emit(cfg, report, text.str());
  return all ? kPass : kMathFailure;
}

// ---------------------------------------------------------------------------
// sys

hho::SystemSpec load_system(const std::string& path) { return hho::system_from_json(hho::read_json_file(path)); }

int cmd_sys_generate(const RunConfig& cfg, const hho::Hho2& op, const std::string& a_file, const std::string& b_file,
                     bool random) {
  const std::size_t n = op.n();
  if (op.is_degenerate()) throw InputError("degenerate operator: Pf(g) vanishes identically");
  std::optional<hho::FluxParams> params;
  if (random) {
    hho::Rng rng(cfg.seed);
    params = hho::random_flux_params(rng, n, cfg.range);
  } else {
    if (a_file.empty() || b_file.empty()) throw InputError("sys generate needs --A and --B, or --random");
    params = hho::FluxParams(hho::skew_from_json(hho::read_json_file(a_file), n, a_file),
                             hho::vector_from_json(hho::read_json_file(b_file), n, b_file));
  }
  const auto sys = hho::generate_flux(op, *params);
  Json report = hho::system_json(sys);
  if (random) report["seed"] = cfg.seed;
  Json flux;
  flux["denominator"] = sys.denominator().to_string();
  Json nums = Json::array();
  for (const auto& x : sys.numerators()) nums.push_back(x.to_string());
  flux["numerators"] = std::move(nums);
  report["flux"] = std::move(flux);
  report["linear"] = sys.jacobian_constant();
  if (cfg.output == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    // The text form is still a loadable system descriptor.
    std::cout << report.dump(2) << "\n";
    std::cerr << (sys.jacobian_constant() ? "linear system (constant Jacobian)\n" : "nonlinear system\n");
  }
  return kPass;
}

int cmd_sys_verify(const RunConfig& cfg, const hho::SystemSpec& spec) {
  const auto sys = hho::generate_flux(spec.op, spec.params, spec.constants);
  const std::size_t n = sys.n();
  hho::CompatReport compat;
  if (n <= 6) {
    compat = hho::check_compat(sys);
  } else {
    hho::Rng rng(cfg.seed);
    compat = hho::check_compat_pointwise(sys, hho::sample_points(sys.op(), cfg.samples, rng, sampling(cfg)));
  }
  const auto pl = hho::pluecker_relations(sys);
  const auto fs = hho::flux_structure(sys);
  const bool pass = compat.ok() && pl.ok() && fs.ok();

  Json report;
  report["seed"] = cfg.seed;
  report["n"] = n;
  Json c;
  c["mode"] = compat.symbolic ? "symbolic" : "pointwise";
  c["points"] = compat.points;
  c["first_checked"] = compat.first_checked;
  c["second_checked"] = compat.second_checked;
  c["first_failures"] = compat.first_failures.size();
  c["second_failures"] = compat.second_failures.size();
  c["pass"] = compat.ok();
  report["compatibility"] = std::move(c);
  report["pluecker"] = {{"relations", pl.holds.size()}, {"pass", pl.ok()}};
  report["flux_structure"] = {{"denominators_divide_pfaffian", fs.denominators_divide},
                              {"max_numerator_degree", fs.max_numerator_degree},
                              {"pass", fs.ok()}};
  report["linear"] = sys.jacobian_constant();
  report["pass"] = pass;

  std::ostringstream text;
  text << "compatibility (" << (compat.symbolic ? "symbolic" : std::to_string(compat.points) + " points") << "): "
       << (compat.ok() ? "pass" : "FAIL") << "  [" << compat.first_checked << " first-order, "
       << compat.second_checked << " second-order identities]\n"
       << "Pluecker relations: " << (pl.ok() ? "pass" : "FAIL") << "\n"
       << "flux denominators divide Pf(g): " << yes_no(fs.denominators_divide)
       << ", max numerator degree " << fs.max_numerator_degree << " (bound " << n / 2 << ")\n"
       << "linear: " << yes_no(sys.jacobian_constant()) << "\n"
       << (pass ? "PASS\n" : "FAIL\n");
  emit(cfg, report, text.str());
  return pass ? kPass : kMathFailure;
}

Json block_json(const hho::EigenBlock& b) {
  Json roots = Json::array();
  for (const auto& r : b.rational_roots) roots.push_back(hho::rational_json(r));
  return {{"factor", b.factor.to_string()},
          {"rational_roots", std::move(roots)},
          {"algebraic", b.algebraic},
          {"geometric", b.geometric},
          {"linearly_degenerate", b.linearly_degenerate ? Json(*b.linearly_degenerate) : Json(nullptr)}};
}

int cmd_sys_diagnose_exact(const RunConfig& cfg, const hho::ConservativeSystem& sys,
                           const std::vector<hho::RationalVector>& points) {
  const auto r = hho::diagnose(sys, points);
  Json list = Json::array();
  std::ostringstream text;
  for (const auto& p : r.points) {
    Json blocks = Json::array();
    for (const auto& b : p.blocks) blocks.push_back(block_json(b));
    list.push_back({{"u", point_json(p.u)},
                    {"nijenhuis_nonzero", !p.nijenhuis_zero},
                    {"nijenhuis_forms_agree", p.nijenhuis_forms_agree},
                    {"haantjes_zero", p.haantjes_zero},
                    {"sqrt_charpoly", p.sqrt_charpoly.to_string()},
                    {"charpoly", (p.sqrt_charpoly * p.sqrt_charpoly).to_string()},
                    {"charpoly_consistent", p.charpoly_consistent},
                    {"multiplicities", std::move(blocks)},
                    {"diagonalizable", p.diagonalizable},
                    {"exceptional", p.exceptional}});
    text << point_text(p.u) << "\n"
         << "  Nijenhuis " << (p.nijenhuis_zero ? "zero" : "nonzero") << ", forms agree: "
         << yes_no(p.nijenhuis_forms_agree) << "; Haantjes zero: " << yes_no(p.haantjes_zero) << "\n"
         << "  sqrt charpoly: " << p.sqrt_charpoly.to_string() << "\n";
    for (const auto& b : p.blocks) {
      text << "  roots of " << b.factor.to_string() << ": algebraic " << b.algebraic << ", geometric "
           << b.geometric << "\n";
    }
    text << "  diagonalizable: " << yes_no(p.diagonalizable) << "\n";
  }
  const bool pass = r.all_haantjes_zero() && r.all_nijenhuis_agree() && r.all_charpoly_consistent();
  Json report;
  report["seed"] = cfg.seed;
  report["mode"] = "exact";
  report["points"] = std::move(list);
  report["summary"] = {{"haantjes_zero", r.all_haantjes_zero()},
                       {"nijenhuis_forms_agree", r.all_nijenhuis_agree()},
                       {"charpoly_consistent", r.all_charpoly_consistent()},
                       {"diagonalizable", r.all_diagonalizable()},
                       {"linearly_degenerate", r.all_linearly_degenerate()},
                       {"exceptional", r.any_exceptional()}};
  report["pass"] = pass;
  text << "summary: Haantjes zero " << yes_no(r.all_haantjes_zero()) << ", Nijenhuis forms agree "
       << yes_no(r.all_nijenhuis_agree()) << ", charpoly consistent " << yes_no(r.all_charpoly_consistent())
       << ", diagonalizable " << yes_no(r.all_diagonalizable()) << "\n"
       << (pass ? "PASS\n" : "FAIL\n");
  emit(cfg, report, text.str());
  return pass ? kPass : kMathFailure;
}

int cmd_sys_diagnose_float(const RunConfig& cfg, const hho::ConservativeSystem& sys,
                           const std::vector<hho::RationalVector>& points) {
  const hho::JetEvaluator jets(sys);
  Json list = Json::array();
  std::ostringstream text;
  bool converged = true;
  for (const auto& u : points) {
    const auto d = hho::diag_check_float(sys, jets.at(u), u, cfg.digits);
    converged = converged && d.converged;
    Json eig = Json::array();
    text << point_text(u) << "\n";
    for (const auto& e : d.eigenvalues) {
      eig.push_back({{"real", e.real}, {"imag", e.imag}, {"geometric", e.geometric}});
      const bool negative = !e.imag.empty() && e.imag[0] == '-';
      text << "  " << e.real << (negative ? " - " : " + ") << (negative ? e.imag.substr(1) : e.imag)
           << " i  geometric " << e.geometric << "\n";
    }
    list.push_back({{"u", point_json(u)},
                    {"eigenvalues", std::move(eig)},
                    {"diagonalizable", d.diagonalizable},
                    {"converged", d.converged}});
    text << "  diagonalizable (numerical): " << yes_no(d.diagonalizable) << "\n";
  }
  Json report;
  report["seed"] = cfg.seed;
  report["mode"] = "float";
  report["digits"] = cfg.digits;
  report["certifying"] = false;
  report["points"] = std::move(list);
  report["pass"] = converged;
  text << "floating-point mode, " << cfg.digits << " digits: not a certificate\n";
  emit(cfg, report, text.str());
  return converged ? kPass : kMathFailure;
}

int cmd_sys_diagnose(const RunConfig& cfg, const hho::SystemSpec& spec, std::size_t count) {
  const auto sys = hho::generate_flux(spec.op, spec.params, spec.constants);
  hho::Rng rng(cfg.seed);
  const auto points = hho::sample_points(sys.op(), count, rng, sampling(cfg));
  return cfg.mode == "float" ? cmd_sys_diagnose_float(cfg, sys, points) : cmd_sys_diagnose_exact(cfg, sys, points);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Second-order homogeneous Hamiltonian operators, 3-forms and compatible conservation laws"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--samples", cfg.samples, "number of sample points")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--range", cfg.range, "integer bound for random coefficients")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--mode", cfg.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}))->capture_default_str();
  app.add_option("--digits", cfg.digits, "precision in float mode")->check(CLI::Range(10u, 10000u))->capture_default_str();
  app.add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  std::string params_text, id, file, sl, a_file, b_file;
  std::size_t points = 0;
  bool random = false;
  std::function<int()> action;

  auto* catalog = app.add_subcommand("catalog", "catalog of normal forms");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "list entries");
  list->callback([&] { action = [&] { return cmd_catalog_list(cfg); }; });
  auto* show = catalog->add_subcommand("show", "matrix and determinant of an entry");
  show->add_option("id", id)->required();
  show->add_option("--params", params_text, "lambda values, e.g. l1=2,l2=3");
  show->callback([&] { action = [&] { return cmd_catalog_show(cfg, id, parse_params(params_text)); }; });
  auto* exp = catalog->add_subcommand("export", "operator JSON of an entry");
  exp->add_option("id", id)->required();
  exp->add_option("--params", params_text, "lambda values, e.g. l1=2,l2=3");
  exp->callback([&] { action = [&] { return cmd_catalog_export(id, parse_params(params_text)); }; });

  auto* op = app.add_subcommand("op", "operator commands");
  op->require_subcommand(1);
  const auto op_arg = [&](CLI::App* sub) {
    sub->add_option("operator", file, "operator JSON file or catalog id")->required();
    sub->add_option("--params", params_text, "lambda values for a catalog id");
  };
  auto* validate = op->add_subcommand("validate", "skewness and degeneracy");
  op_arg(validate);
  validate->callback([&] { action = [&] { return cmd_op_validate(cfg, load_operator(file, parse_params(params_text))); }; });
  auto* transform = op->add_subcommand("transform", "action of an SL(n+1) matrix");
  op_arg(transform);
  transform->add_option("--sl", sl, "JSON matrix file")->required();
  transform->callback([&] { action = [&] { return cmd_op_transform(load_operator(file, parse_params(params_text)), sl); }; });
  auto* conformal = op->add_subcommand("conformal-check", "conformal identity at random points");
  op_arg(conformal);
  conformal->add_option("--sl", sl, "JSON matrix file")->required();
  conformal->add_option("--points", points, "number of points (default: --samples)");
  conformal->callback([&] {
    action = [&] {
      return cmd_op_conformal(cfg, load_operator(file, parse_params(params_text)), sl, points ? points : cfg.samples);
    };
  });
  auto* to3 = op->add_subcommand("to-3form", "the 3-form of an operator");
  op_arg(to3);
  to3->callback([&] {
    action = [&] {
      const auto o = load_operator(file, parse_params(params_text));
      std::cout << hho::form_json(hho::embed(o.T(), o.g0())).dump(2) << "\n";
      return int{kPass};
    };
  });
  auto* from3 = op->add_subcommand("from-3form", "the operator of a 3-form");
  from3->add_option("form", file, "3-form JSON file")->required();
  from3->callback([&] {
    action = [&] {
      const auto form = hho::form_from_json(hho::read_json_file(file));
      if (form.dim() < 3 || form.dim() % 2 == 0) throw InputError(file + ": dim must be odd and at least 3");
      auto chart = hho::chart_restrict(form);
      std::cout << hho::operator_json(hho::Hho2(std::move(chart.T), std::move(chart.g0))).dump(2) << "\n";
      return int{kPass};
    };
  });

  auto* sys = app.add_subcommand("sys", "conservation-law systems");
  sys->require_subcommand(1);
  auto* generate = sys->add_subcommand("generate", "system from an operator and (A, B)");
  generate->add_option("operator", file, "operator JSON file or catalog id")->required();
  generate->add_option("--params", params_text, "lambda values for a catalog id");
  generate->add_option("--A", a_file, "skew matrix JSON [[i,j,\"p/q\"],...]");
  generate->add_option("--B", b_file, "vector JSON [\"p/q\",...]");
  generate->add_flag("--random", random, "draw A and B from --seed and --range");
  generate->callback([&] {
    action = [&] { return cmd_sys_generate(cfg, load_operator(file, parse_params(params_text)), a_file, b_file, random); };
  });
  auto* verify = sys->add_subcommand("verify", "compatibility, Pluecker relations, flux structure");
  verify->add_option("system", file, "system JSON file")->required();
  verify->callback([&] { action = [&] { return cmd_sys_verify(cfg, load_system(file)); }; });
  auto* diagnose = sys->add_subcommand("diagnose", "Nijenhuis, Haantjes and eigenvalue structure");
  diagnose->add_option("system", file, "system JSON file")->required();
  diagnose->add_option("--points", points, "number of points (default: --samples)");
  diagnose->callback([&] { action = [&] { return cmd_sys_diagnose(cfg, load_system(file), points ? points : cfg.samples); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }
  try {
    return action();
  } catch (const hho::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
