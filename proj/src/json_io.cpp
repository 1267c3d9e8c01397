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

#include "hho/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hho/error.hpp"

namespace hho {

namespace {

[[noreturn]] void shape_error(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) shape_error(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) shape_error(where, std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t index_from_json(const Json& j, std::size_t dim, const std::string& where) {
  if (!j.is_number_integer()) shape_error(where, "expected an integer index");
  const auto v = j.get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > dim) {
    shape_error(where, "index " + std::to_string(v) + " outside 1.." + std::to_string(dim));
  }
  return static_cast<std::size_t>(v - 1);
}

std::size_t dimension_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 1) shape_error(where, "expected a positive integer");
  return static_cast<std::size_t>(j.get<long long>());
}

// Entries [i1,...,ik,"p/q"] with i1 < ... < ik, listed in increasing order.
template <std::size_t K>
std::vector<std::pair<std::array<std::size_t, K>, Rational>> indexed_entries(const Json& j, std::size_t dim,
                                                                             const std::string& where) {
  if (!j.is_array()) shape_error(where, "expected an array");
  std::vector<std::pair<std::array<std::size_t, K>, Rational>> out;
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string at = where + "/" + std::to_string(e);
    const Json& item = j[e];
    if (!item.is_array() || item.size() != K + 1) {
      shape_error(at, "expected " + std::to_string(K) + " indices and a coefficient");
    }
    std::array<std::size_t, K> idx{};
    for (std::size_t k = 0; k < K; ++k) {
      idx[k] = index_from_json(item[k], dim, at + "/" + std::to_string(k));
      if (k > 0 && idx[k] <= idx[k - 1]) shape_error(at, "indices must be strictly increasing");
    }
    if (!out.empty() && idx <= out.back().first) shape_error(at, "entries must be in increasing index order");
    out.emplace_back(idx, rational_from_json(item[K], at + "/" + std::to_string(K)));
  }
  return out;
}

}  // namespace

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    const auto cut = what.find("syntax error");
    if (cut != std::string::npos) what = what.substr(cut);
    throw ParseError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

Json rational_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) shape_error(where, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    shape_error(where, e.what());
  }
}

Json operator_json(const Hho2& op, const ParamValues& params) {
  Json j;
  j["n"] = op.n();
  Json T = Json::array();
  for (const auto& [t, v] : op.T().coefficients()) T.push_back(Json::array({t[0] + 1, t[1] + 1, t[2] + 1, rational_json(v)}));
  j["T"] = std::move(T);
  j["g0"] = skew_json(op.g0());
  Json p = Json::object();
  for (const auto& [name, v] : params) p[name] = rational_json(v);
  j["params"] = std::move(p);
  return j;
}

ParamValues params_from_json(const Json& j) {
  ParamValues out;
  if (!j.is_object() || !j.contains("params")) return out;
  const Json& p = j["params"];
  if (!p.is_object()) shape_error("/params", "expected an object");
  for (auto it = p.begin(); it != p.end(); ++it) out[it.key()] = rational_from_json(it.value(), "/params/" + it.key());
  return out;
}

Hho2 operator_from_json(const Json& j) {
  const std::size_t n = dimension_from_json(member(j, "n", ""), "/n");
  if (n % 2 != 0) shape_error("/n", "operator dimension must be even");
  SkewTensor3 T(n);
  for (const auto& [t, v] : indexed_entries<3>(member(j, "T", ""), n, "/T")) T.set(t[0], t[1], t[2], v);
  QMatrix g0 = skew_from_json(member(j, "g0", ""), n, "/g0");
  params_from_json(j);
  return Hho2(std::move(T), std::move(g0));
}

Json form_json(const ThreeForm& form) {
  Json j;
  j["dim"] = form.dim();
  Json c = Json::array();
  for (const auto& [t, v] : form.coefficients()) c.push_back(Json::array({t[0] + 1, t[1] + 1, t[2] + 1, rational_json(v)}));
  j["coeffs"] = std::move(c);
  return j;
}

ThreeForm form_from_json(const Json& j) {
  const std::size_t dim = dimension_from_json(member(j, "dim", ""), "/dim");
  ThreeForm form(dim);
  for (const auto& [t, v] : indexed_entries<3>(member(j, "coeffs", ""), dim, "/coeffs")) form.set(t[0], t[1], t[2], v);
  return form;
}

Json skew_json(const QMatrix& a) {
  Json j = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = i + 1; k < a.cols(); ++k) {
      if (sgn(a(i, k)) != 0) j.push_back(Json::array({i + 1, k + 1, rational_json(a(i, k))}));
    }
  }
  return j;
}

QMatrix skew_from_json(const Json& j, std::size_t n, const std::string& where) {
  QMatrix a(n, n);
  for (const auto& [ij, v] : indexed_entries<2>(j, n, where)) {
    a(ij[0], ij[1]) = v;
    a(ij[1], ij[0]) = -v;
  }
  return a;
}

Json vector_json(const RationalVector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(rational_json(x));
  return j;
}

RationalVector vector_from_json(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) shape_error(where, "expected an array of " + std::to_string(n) + " rationals");
  RationalVector v;
  for (std::size_t k = 0; k < n; ++k) v.push_back(rational_from_json(j[k], where + "/" + std::to_string(k)));
  return v;
}

Json matrix_json(const QMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(rational_json(m(i, k)));
    j.push_back(std::move(row));
  }
  return j;
}

QMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) shape_error(where, "expected a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array()) shape_error(where + "/0", "expected an array");
  const std::size_t cols = j[0].size();
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string at = where + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != cols) shape_error(at, "expected a row of " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k], at + "/" + std::to_string(k));
  }
  return m;
}

Json system_json(const ConservativeSystem& sys) {
  Json j;
  j["op"] = operator_json(sys.op());
  j["A"] = skew_json(sys.params().A);
  j["B"] = vector_json(sys.params().B);
  const auto& c = sys.constants();
  if (std::any_of(c.begin(), c.end(), [](const Rational& x) { return sgn(x) != 0; })) j["c"] = vector_json(c);
  return j;
}

SystemSpec system_from_json(const Json& j) {
  const Json& opj = member(j, "op", "");
  Hho2 op = [&] {
    try {
      return operator_from_json(opj);
    } catch (const ParseError& e) {
      throw ParseError(std::string("/op") + e.what());
    }
  }();
  const std::size_t n = op.n();
  QMatrix A = skew_from_json(member(j, "A", ""), n, "/A");
  RationalVector B = vector_from_json(member(j, "B", ""), n, "/B");
  RationalVector c = j.contains("c") ? vector_from_json(j["c"], n, "/c") : RationalVector(n);
  return SystemSpec{std::move(op), FluxParams(std::move(A), std::move(B)), std::move(c)};
}

}  // namespace hho
