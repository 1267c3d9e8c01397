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

#include <string>
#include <string_view>

#include "json.hpp"

#include "hho/catalog.hpp"
#include "hho/hydro.hpp"
#include "hho/operator.hpp"
#include "hho/threeform.hpp"

namespace hho {

/// Key order is kept as inserted, so identical inputs serialize identically.
using Json = nlohmann::ordered_json;

/// Syntax errors become ParseError "<source>:<line>:<column>: ...".
Json parse_json(std::string_view text, std::string_view source = "<input>");
/// Reads and parses a file; a missing file is a ParseError as well.
Json read_json_file(const std::string& path);

Json rational_json(const Rational& x);
/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j, const std::string& where);

/// {"n": n, "T": [[i,j,k,"p/q"],...], "g0": [[i,j,"p/q"],...], "params": {...}}
/// with 1-based, strictly increasing index tuples in lexicographic order.
Json operator_json(const Hho2& op, const ParamValues& params = {});
/// Shape errors carry the JSON pointer of the offending value.
Hho2 operator_from_json(const Json& j);
ParamValues params_from_json(const Json& j);

/// {"dim": n+1, "coeffs": [[i,j,k,"p/q"],...]}
Json form_json(const ThreeForm& form);
ThreeForm form_from_json(const Json& j);

/// [[i,j,"p/q"],...] over i < j for a skew matrix.
Json skew_json(const QMatrix& a);
QMatrix skew_from_json(const Json& j, std::size_t n, const std::string& where);
Json vector_json(const RationalVector& v);
RationalVector vector_from_json(const Json& j, std::size_t n, const std::string& where);

/// Rows of rational strings; used for SL(n+1) matrices.
Json matrix_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& j, const std::string& where);

/// {"op": ..., "A": ..., "B": ..., "c": [...]}; "c" is optional and defaults to 0.
struct SystemSpec {
  Hho2 op;
  FluxParams params;
  RationalVector constants;
};

Json system_json(const ConservativeSystem& sys);
SystemSpec system_from_json(const Json& j);

}  // namespace hho
