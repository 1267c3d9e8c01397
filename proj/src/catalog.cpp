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

#include "hho/catalog.hpp"

#include <algorithm>

#include "hho/error.hpp"
#include "hho/expr.hpp"

namespace hho {

namespace {

std::vector<FormTerm> terms(int sign, const std::string& param, std::initializer_list<std::array<std::size_t, 3>> t) {
  std::vector<FormTerm> out;
  for (const auto& idx : t) out.push_back({sign, param, idx});
  return out;
}

std::vector<FormTerm> concat(std::initializer_list<std::vector<FormTerm>> parts) {
  std::vector<FormTerm> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

const std::vector<std::array<std::size_t, 3>> kP1{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
const std::vector<std::array<std::size_t, 3>> kP2{{1, 4, 7}, {2, 5, 8}, {3, 6, 9}};
const std::vector<std::array<std::size_t, 3>> kP3{{1, 5, 9}, {2, 6, 7}, {3, 4, 8}};
const std::vector<std::array<std::size_t, 3>> kP4{{1, 6, 8}, {2, 4, 9}, {3, 5, 7}};

std::vector<FormTerm> piece(int sign, const std::string& param, const std::vector<std::array<std::size_t, 3>>& t) {
  std::vector<FormTerm> out;
  for (const auto& idx : t) out.push_back({sign, param, idx});
  return out;
}

std::vector<std::string> rows(std::initializer_list<std::initializer_list<const char*>> r) {
  std::vector<std::string> out;
  for (const auto& row : r) {
    for (const char* e : row) out.emplace_back(e);
  }
  return out;
}

std::vector<CatalogEntry> make_entries() {
  std::vector<CatalogEntry> e;
  const std::vector<std::string> lambdas4{"lambda1", "lambda2", "lambda3", "lambda4"};
  const std::vector<std::string> lambdas3{"lambda1", "lambda2", "lambda3"};

  e.push_back({"n2", 2, "n=2, the unique nontrivial 3-form", {}, terms(1, "", {{1, 2, 3}}),
               rows({{"0", "1"}, {"-1", "0"}}), "1", false, "only one nontrivial 3-form"});

  e.push_back({"n4-open", 4, "n=4, open orbit", {}, terms(1, "", {{1, 2, 5}, {3, 4, 5}}),
               rows({{"0", "1", "0", "0"}, {"-1", "0", "0", "0"}, {"0", "0", "0", "1"}, {"0", "0", "-1", "0"}}), "1",
               false, "open orbit"});

  e.push_back({"n4-degenerate", 4, "n=4, closed orbit (degenerate)", {}, terms(1, "", {{1, 2, 3}}),
               rows({{"0", "u3", "-u2", "0"}, {"-u3", "0", "u1", "0"}, {"u2", "-u1", "0", "0"}, {"0", "0", "0", "0"}}),
               "0", true, "totally decomposable; det(g) = 0"});

  e.push_back({"n6-X", 6, "n=6, case X (open orbit)", {},
               terms(1, "", {{1, 2, 3}, {4, 5, 6}, {1, 4, 7}, {2, 5, 7}, {3, 6, 7}}),
               rows({{"0", "u3", "-u2", "1", "0", "0"},
                     {"-u3", "0", "u1", "0", "1", "0"},
                     {"u2", "-u1", "0", "0", "0", "1"},
                     {"-1", "0", "0", "0", "u6", "-u5"},
                     {"0", "-1", "0", "-u6", "0", "u4"},
                     {"0", "0", "-1", "u5", "-u4", "0"}}),
               "(u1*u4 + u2*u5 + u3*u6 - 1)^2", false, "Schouten/Gurevich case X"});

  e.push_back({"n6-IX", 6, "n=6, case IX", {}, terms(1, "", {{1, 2, 3}, {4, 5, 6}, {1, 4, 7}, {2, 5, 7}}),
               rows({{"0", "u3", "-u2", "1", "0", "0"},
                     {"-u3", "0", "u1", "0", "1", "0"},
                     {"u2", "-u1", "0", "0", "0", "0"},
                     {"-1", "0", "0", "0", "u6", "-u5"},
                     {"0", "-1", "0", "-u6", "0", "u4"},
                     {"0", "0", "0", "u5", "-u4", "0"}}),
               "(u1*u4 + u2*u5)^2", false, "Schouten/Gurevich case IX"});

  e.push_back({"n6-VIII", 6, "n=6, case VIII", {}, terms(1, "", {{1, 2, 3}, {4, 5, 6}, {1, 4, 7}}),
               rows({{"0", "u3", "-u2", "1", "0", "0"},
                     {"-u3", "0", "u1", "0", "0", "0"},
                     {"u2", "-u1", "0", "0", "0", "0"},
                     {"-1", "0", "0", "0", "u6", "-u5"},
                     {"0", "0", "0", "-u6", "0", "u4"},
                     {"0", "0", "0", "u5", "-u4", "0"}}),
               "(u1*u4)^2", false, "Schouten/Gurevich case VIII"});

  e.push_back({"n6-VII", 6, "n=6, case VII", {}, terms(1, "", {{4, 5, 6}, {1, 4, 7}, {2, 5, 7}, {3, 6, 7}}),
               rows({{"0", "0", "0", "1", "0", "0"},
                     {"0", "0", "0", "0", "1", "0"},
                     {"0", "0", "0", "0", "0", "1"},
                     {"-1", "0", "0", "0", "u6", "-u5"},
                     {"0", "-1", "0", "-u6", "0", "u4"},
                     {"0", "0", "-1", "u5", "-u4", "0"}}),
               "1", false, "Schouten/Gurevich case VII"});

  e.push_back({"n6-VI", 6, "n=6, case VI", {}, terms(1, "", {{1, 4, 7}, {2, 5, 7}, {3, 6, 7}}),
               rows({{"0", "0", "0", "1", "0", "0"},
                     {"0", "0", "0", "0", "1", "0"},
                     {"0", "0", "0", "0", "0", "1"},
                     {"-1", "0", "0", "0", "0", "0"},
                     {"0", "-1", "0", "0", "0", "0"},
                     {"0", "0", "-1", "0", "0", "0"}}),
               "1", false, "Schouten/Gurevich case VI"});

  e.push_back({"n8-fam1", 8, "n=8, family 1: l1 p1 + l2 p2 + l3 p3 + l4 p4", lambdas4,
               concat({piece(1, "lambda1", kP1), piece(1, "lambda2", kP2), piece(1, "lambda3", kP3),
                       piece(1, "lambda4", kP4)}),
               rows({{"0", "l1*u3", "-l1*u2", "l2*u7", "l3", "l4*u8", "-l2*u4", "-l4*u6"},
                     {"-l1*u3", "0", "l1*u1", "l4", "l2*u8", "l3*u7", "-l3*u6", "-l2*u5"},
                     {"l1*u2", "-l1*u1", "0", "l3*u8", "l4*u7", "l2", "-l4*u5", "-l3*u4"},
                     {"-l2*u7", "-l4", "-l3*u8", "0", "l1*u6", "-l1*u5", "l2*u1", "l3*u3"},
                     {"-l3", "-l2*u8", "-l4*u7", "-l1*u6", "0", "l1*u4", "l4*u3", "l2*u2"},
                     {"-l4*u8", "-l3*u7", "-l2", "l1*u5", "-l1*u4", "0", "l3*u2", "l4*u1"},
                     {"l2*u4", "l3*u6", "l4*u5", "-l2*u1", "-l4*u3", "-l3*u2", "0", "l1"},
                     {"l4*u6", "l2*u5", "l3*u4", "-l3*u3", "-l2*u2", "-l4*u1", "-l1", "0"}}),
               std::nullopt, false,
               "semisimple only (e = 0); stabilizer cyclic abelian of order 81; parameter inequalities not checked"});

  const auto fam2_display = [](bool e1) {
    return rows({{"0", "l1*u3", "-l1*u2", "l2*u7", "-l3", "u8", "-l2*u4", "-u6"},
                 {"-l1*u3", "0", "l1*u1", e1 ? "1" : "0", "l2*u8", "-l3*u7", "l3*u6", "-l2*u5"},
                 {"l1*u2", "-l1*u1", "0", "-l3*u8", "0", "l2", "0", "l3*u4"},
                 {"-l2*u7", e1 ? "-1" : "0", "l3*u8", "0", "l1*u6", "-l1*u5", "l2*u1", "-l3*u3"},
                 {"l3", "-l2*u8", "0", "-l1*u6", "0", "l1*u4", "0", "l2*u2"},
                 {"-u8", "l3*u7", "-l2", "l1*u5", "-l1*u4", "0", "-l3*u2", "u1"},
                 {"l2*u4", "-l3*u6", "0", "-l2*u1", "0", "l3*u2", "0", "l1"},
                 {"u6", "l2*u5", "-l3*u4", "l3*u3", "-l2*u2", "-u1", "-l1", "0"}});
  };
  const auto fam2_semisimple = concat({piece(1, "lambda1", kP1), piece(1, "lambda2", kP2), piece(-1, "lambda3", kP3)});

  e.push_back({"n8-fam2-e1", 8, "n=8, family 2 with nilpotent part e1 = 168 + 249", lambdas3,
               concat({fam2_semisimple, terms(1, "", {{1, 6, 8}, {2, 4, 9}})}), fam2_display(true), std::nullopt,
               false,
               "stabilizer dimension 0; printed matrix mixes u and v, read as u; the 3-form is authoritative"});

  e.push_back({"n8-fam2-e2", 8, "n=8, family 2 with nilpotent part e2 = 168", lambdas3,
               concat({fam2_semisimple, terms(1, "", {{1, 6, 8}})}), fam2_display(false), std::nullopt, false,
               "stabilizer dimension 1; printed matrix mixes u and v, read as u; the 3-form is authoritative"});
  return e;
}

std::vector<std::string> display_names(std::size_t n) { return default_names(n); }

ParamValues display_constants(const CatalogEntry& entry, const ParamValues& params) {
  ParamValues constants;
  for (std::size_t i = 0; i < entry.parameters.size(); ++i) {
    constants["l" + std::to_string(i + 1)] = params.at(entry.parameters[i]);
  }
  return constants;
}

void check_params(const CatalogEntry& entry, const ParamValues& params) {
  for (const auto& p : entry.parameters) {
    if (!params.contains(p)) throw Error("missing parameter " + p + " for catalog entry " + entry.id);
  }
  for (const auto& [name, value] : params) {
    if (std::find(entry.parameters.begin(), entry.parameters.end(), name) == entry.parameters.end()) {
      throw Error("unknown parameter " + name + " for catalog entry " + entry.id);
    }
  }
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = make_entries();
  return entries;
}

const CatalogSummary& catalog_summary() {
  static const CatalogSummary summary;
  return summary;
}

const CatalogEntry& catalog_entry(std::string_view id) {
  for (const auto& e : catalog_entries()) {
    if (e.id == id) return e;
  }
  throw Error("unknown catalog id '" + std::string(id) + "'");
}

ThreeForm catalog_form(const CatalogEntry& entry, const ParamValues& params) {
  check_params(entry, params);
  ThreeForm form(entry.n + 1);
  for (const auto& t : entry.form) {
    const Rational scale = t.parameter.empty() ? Rational(1) : params.at(t.parameter);
    form.add(t.indices[0] - 1, t.indices[1] - 1, t.indices[2] - 1, t.sign * scale);
  }
  return form;
}

Hho2 build(std::string_view id, const ParamValues& params) {
  const CatalogEntry& entry = catalog_entry(id);
  Hho2 op = split_tensor(catalog_form(entry, params));
  if (!entry.degenerate && op.is_degenerate()) {
    throw DomainError("parameters make catalog entry " + entry.id + " degenerate");
  }
  return op;
}

PolyMatrix catalog_display(const CatalogEntry& entry, const ParamValues& params) {
  check_params(entry, params);
  const auto names = display_names(entry.n);
  const auto constants = display_constants(entry, params);
  PolyMatrix m(entry.n, entry.n);
  for (std::size_t i = 0; i < entry.n; ++i) {
    for (std::size_t j = 0; j < entry.n; ++j) m(i, j) = parse_polynomial(entry.display[i * entry.n + j], names, constants);
  }
  return m;
}

std::optional<MultiPoly> catalog_expected_det(const CatalogEntry& entry) {
  if (!entry.expected_det) return std::nullopt;
  const auto names = display_names(entry.n);
  return parse_polynomial(*entry.expected_det, names);
}

}  // namespace hho
