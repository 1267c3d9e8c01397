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

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hho/operator.hpp"
#include "hho/threeform.hpp"

namespace hho {

using ParamValues = std::map<std::string, Rational>;

/// One summand of a defining 3-form: sign * (parameter or 1) * dv^a ^ dv^b ^ dv^c.
struct FormTerm {
  int sign;
  std::string parameter;  ///< empty for the constant 1
  std::array<std::size_t, 3> indices;  ///< 1-based
};

struct CatalogEntry {
  std::string id;
  std::size_t n;
  std::string title;
  std::vector<std::string> parameters;  ///< "lambda1", ...
  std::vector<FormTerm> form;
  /// Printed leading coefficient, row-major, in u1..un and l1..l4.
  std::vector<std::string> display;
  /// Printed determinant of g, when the classification states one.
  std::optional<std::string> expected_det;
  bool degenerate = false;
  std::string notes;
};

struct CatalogSummary {
  std::size_t nondegenerate_n2 = 1;
  std::size_t nondegenerate_n6 = 5;
  std::size_t nondegenerate_n8_total = 132;
  std::vector<std::string> n8_instantiable{"family 1", "family 2"};
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogSummary& catalog_summary();
/// Throws Error for an unknown id.
const CatalogEntry& catalog_entry(std::string_view id);

/// Defining 3-form with parameters instantiated. Throws Error when a
/// parameter is missing or unknown.
ThreeForm catalog_form(const CatalogEntry& entry, const ParamValues& params = {});

/// Operator whose metric is the printed matrix: its extended tensor carries
/// the 3-form coefficients unscaled, i.e. (T, g0) = chart_restrict(form) / 3.
/// Throws DomainError when a nominally nondegenerate entry instantiates to
/// Pf(g) == 0.
Hho2 build(std::string_view id, const ParamValues& params = {});

/// Printed matrix with parameters instantiated, as polynomials in u.
PolyMatrix catalog_display(const CatalogEntry& entry, const ParamValues& params = {});
/// Printed determinant, when available.
std::optional<MultiPoly> catalog_expected_det(const CatalogEntry& entry);

}  // namespace hho
