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

#include <set>

#include "hho/catalog.hpp"
#include "hho/error.hpp"
#include "hho/expr.hpp"
#include "hho/random.hpp"
#include "oracles.hpp"

using namespace hho;

namespace {

MultiPoly poly6(const std::string& s) {
  const auto names = default_names(6);
  return parse_polynomial(s, names);
}

}  // namespace

TEST_CASE("catalog listing", "[catalog]") {
  const auto& entries = catalog_entries();
  CHECK(entries.size() == 11);
  std::set<std::size_t> dims;
  std::size_t degenerate = 0;
  for (const auto& e : entries) {
    dims.insert(e.n);
    degenerate += e.degenerate;
  }
  CHECK(dims == std::set<std::size_t>{2, 4, 6, 8});
  CHECK(degenerate == 1);
  CHECK(catalog_entry("n4-degenerate").degenerate);
  CHECK_THROWS_AS(catalog_entry("n5"), Error);
  const auto& s = catalog_summary();
  CHECK(s.nondegenerate_n2 == 1);
  CHECK(s.nondegenerate_n6 == 5);
  CHECK(s.nondegenerate_n8_total == 132);
}

TEST_CASE("printed n=6 determinants", "[catalog]") {
  const std::vector<std::pair<const char*, const char*>> expected{
      {"n6-X", "(u1*u4 + u2*u5 + u3*u6 - 1)^2"},
      {"n6-IX", "(u1*u4 + u2*u5)^2"},
      {"n6-VIII", "(u1*u4)^2"},
      {"n6-VII", "1"},
      {"n6-VI", "1"},
  };
  for (const auto& [id, det] : expected) {
    const Hho2 op = build(id);
    CHECK(det_bareiss(op.metric()) == poly6(det));
    CHECK(op.pfaffian() * op.pfaffian() == poly6(det));
  }
}

TEST_CASE("displayed matrices equal the operators built from the 3-forms", "[catalog]") {
  const ParamValues params{{"lambda1", 2}, {"lambda2", 3}, {"lambda3", 5}, {"lambda4", 7}};
  for (const auto& e : catalog_entries()) {
    ParamValues p;
    for (const auto& name : e.parameters) p[name] = params.at(name);
    const Hho2 op = build(e.id, p);
    CHECK(catalog_display(e, p) == op.metric());
    CHECK(op.n() == e.n);
    CHECK(op.is_degenerate() == e.degenerate);
    if (auto det = catalog_expected_det(e)) CHECK(op.pfaffian() * op.pfaffian() == *det);
    // the catalog operator is the chart data of its 3-form, up to the factor 3
    const auto c = chart_restrict(catalog_form(e, p));
    CHECK(c.T == 3 * op.T());
    CHECK(c.g0 == 3 * op.g0());
  }
}

TEST_CASE("n=8 families need their parameters", "[catalog]") {
  CHECK_THROWS_AS(build("n8-fam1"), Error);
  const Hho2 op = build("n8-fam1", {{"lambda1", 1}, {"lambda2", 2}, {"lambda3", 3}, {"lambda4", 4}});
  CHECK(op.n() == 8);
  CHECK_FALSE(op.is_degenerate());
  Rng rng(41);
  const RationalVector u = random_point(rng, 8);
  CHECK(op.pfaffian().evaluate(u) == oracle::pfaffian_matchings(oracle::metric_at(op, u)));
}
