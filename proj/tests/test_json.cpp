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

#include <catch_amalgamated.hpp>

#include "hho/catalog.hpp"
#include "hho/error.hpp"
#include "hho/json_io.hpp"
#include "hho/random.hpp"

using namespace hho;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("operator JSON round trip", "[json][property]") {
  Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const Hho2 op = random_operator(rng, 2 * static_cast<std::size_t>(rng.uniform(1, 4)));
    const std::string text = operator_json(op).dump();
    CHECK(operator_from_json(parse_json(text)) == op);
    CHECK(operator_json(operator_from_json(parse_json(text))).dump() == text);
  }
}

TEST_CASE("n=2 operator JSON by hand", "[json]") {
  const Json j = operator_json(build("n2"));
  CHECK(j.dump() == R"({"n":2,"T":[],"g0":[[1,2,"1"]],"params":{}})");
  const Json f = form_json(embed(SkewTensor3(2), build("n2").g0()));
  CHECK(f.dump() == R"({"dim":3,"coeffs":[[1,2,3,"1/3"]]})");
}

TEST_CASE("3-form and system JSON round trips", "[json]") {
  Rng rng(72);
  const ThreeForm w = random_form(rng, 7, 0.5);
  CHECK(form_from_json(form_json(w)) == w);
  const auto params = random_flux_params(rng, 6);
  const auto sys = generate_flux(build("n6-X"), params, RationalVector{1, 0, 0, 0, 0, Rational(1, 2)});
  const auto spec = system_from_json(parse_json(system_json(sys).dump()));
  CHECK(spec.op == sys.op());
  CHECK(spec.params.A == params.A);
  CHECK(spec.params.B == params.B);
  CHECK(spec.constants == sys.constants());
  const QMatrix m{{1, Rational(1, 2)}, {0, 1}};
  CHECK(matrix_from_json(matrix_json(m), "") == m);
}

TEST_CASE("malformed JSON reports where it failed", "[json]") {
  const std::string syntax = error_of([] { parse_json("{\n  \"n\": 2,\n  \"T\": [,]\n}", "op.json"); });
  CHECK(syntax.rfind("op.json:3:", 0) == 0);
  CHECK(error_of([] { operator_from_json(parse_json(R"({"n":2,"T":[],"g0":[[2,1,"1"]]})")); }).find("/g0/0") !=
        std::string::npos);
  CHECK(error_of([] { operator_from_json(parse_json(R"({"n":4,"T":[[1,2,5,"1"]],"g0":[]})")); }).find("/T/0/2") !=
        std::string::npos);
  CHECK(error_of([] { operator_from_json(parse_json(R"({"n":3,"T":[],"g0":[]})")); }).find("/n") != std::string::npos);
  CHECK(error_of([] { operator_from_json(parse_json(R"({"n":2,"g0":[]})")); }).find("\"T\"") != std::string::npos);
  CHECK(error_of([] {
          operator_from_json(parse_json(R"({"n":4,"T":[],"g0":[[1,3,"1"],[1,2,"1"]]})"));
        }).find("increasing") != std::string::npos);
  CHECK(error_of([] { operator_from_json(parse_json(R"({"n":2,"T":[],"g0":[[1,2,"1/0"]]})")); }).find("/g0/0/2") !=
        std::string::npos);
  CHECK(error_of([] { read_json_file("/nonexistent/op.json"); }).find("cannot open") != std::string::npos);
}

TEST_CASE("catalog parameters survive export", "[json]") {
  const ParamValues p{{"lambda1", 2}, {"lambda2", 3}, {"lambda3", 5}, {"lambda4", Rational(7, 2)}};
  const Json j = operator_json(build("n8-fam1", p), p);
  CHECK(params_from_json(j) == p);
  CHECK(operator_from_json(j) == build("n8-fam1", p));
}
