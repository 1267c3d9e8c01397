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

#include "hho/error.hpp"
#include "hho/random.hpp"
#include "hho/threeform.hpp"
#include "oracles.hpp"

using namespace hho;

TEST_CASE("skew tensor storage and signs", "[threeform]") {
  SkewTensor3 w(4);
  w.set(2, 0, 1, 5);
  CHECK(w(0, 1, 2) == 5);
  CHECK(w(1, 0, 2) == -5);
  CHECK(w(2, 1, 0) == -5);
  CHECK(w(0, 0, 3) == 0);
  CHECK(w.coefficients().size() == 1);
  CHECK_THROWS_AS(w.set(1, 1, 2, 3), DomainError);
  w.add(0, 1, 2, -5);
  CHECK(w.is_zero());
  std::vector<Rational> bad(27);
  bad[(0 * 3 + 1) * 3 + 2] = 1;
  CHECK_THROWS_AS(SkewTensor3::from_dense(3, bad), DomainError);
}

TEST_CASE("pullback matches the brute-force contraction", "[threeform][property]") {
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = static_cast<std::size_t>(rng.uniform(3, 7));
    const ThreeForm w = random_form(rng, d, 0.6);
    const LinearMap a = random_sl(rng, d);
    const auto expect = oracle::pullback(oracle::form_dense(w), oracle::dense(a.matrix()), d);
    CHECK(pullback(w, a).dense() == expect);
  }
}

TEST_CASE("pullback is a right action", "[threeform][property]") {
  Rng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = static_cast<std::size_t>(rng.uniform(3, 7));
    const ThreeForm w = random_form(rng, d, 0.7);
    const LinearMap a = random_sl(rng, d), b = random_sl(rng, d);
    CHECK(pullback(pullback(w, a), b) == pullback(w, a * b));
    CHECK(pullback(w, LinearMap::identity(d)) == w);
  }
}

TEST_CASE("restriction to the chart and its inverse", "[threeform][property]") {
  Rng rng(23);
  for (std::size_t d : {3u, 5u, 7u, 9u}) {
    const ThreeForm w = random_form(rng, d, 0.5);
    const ChartData c = chart_restrict(w);
    const std::size_t n = d - 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(c.g0(i, j) == 3 * w(i, j, n));
        for (std::size_t k = 0; k < n; ++k) CHECK(c.T(i, j, k) == 3 * w(i, j, k));
      }
    }
    CHECK(embed(c.T, c.g0) == w);
  }
  QMatrix not_skew(2, 2);
  not_skew(0, 1) = 1;
  CHECK_THROWS_AS(embed(SkewTensor3(2), not_skew), DomainError);
}

TEST_CASE("Pluecker pairs and the congruence system", "[threeform]") {
  CHECK(pluecker_pairs(5).size() == 10);
  CHECK(pluecker_pairs(3).front() == std::pair<std::size_t, std::size_t>{0, 1});
  ThreeForm w(3);
  w.set(0, 1, 2, 1);
  const QMatrix c = congruence_system(w);
  REQUIRE(c.rows() == 3);
  REQUIRE(c.cols() == 3);
  // row l, pairs (0,1), (0,2), (1,2): entry 2 w_{l m n}
  CHECK(c(0, 2) == 2);
  CHECK(c(1, 1) == -2);
  CHECK(c(2, 0) == 2);
  CHECK(c(0, 0) == 0);
}

TEST_CASE("linear maps reject singular matrices", "[threeform]") {
  CHECK_THROWS_AS(LinearMap(QMatrix{{1, 2}, {2, 4}}), DomainError);
  const LinearMap a(QMatrix{{2, 0}, {0, Rational(1, 2)}});
  CHECK(a.is_special());
}
