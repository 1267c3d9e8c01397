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
#include "hho/random.hpp"

using namespace hho;

TEST_CASE("seeded draws are reproducible", "[random]") {
  Rng a(99), b(99), c(100);
  std::vector<Rational> xa, xb, xc;
  for (int k = 0; k < 50; ++k) {
    xa.push_back(a.rational(10, 10));
    xb.push_back(b.rational(10, 10));
    xc.push_back(c.rational(10, 10));
  }
  CHECK(xa == xb);
  CHECK(xa != xc);
  Rng d(5);
  for (int k = 0; k < 1000; ++k) {
    const auto v = d.uniform(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
}

TEST_CASE("random SL elements and flux parameters", "[random][property]") {
  Rng rng(81);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = static_cast<std::size_t>(rng.uniform(2, 9));
    CHECK(random_sl(rng, d).determinant() == 1);
    const FluxParams p = random_flux_params(rng, d, 4);
    CHECK(p.A.is_skew());
    for (std::size_t i = 0; i < d; ++i) {
      CHECK(abs(p.B[i]) <= 4);
      CHECK(is_integer(p.B[i]));
    }
  }
}

TEST_CASE("sampling avoids the Pfaffian zero set", "[random]") {
  Rng rng(82);
  const Hho2 op = build("n6-VIII");
  for (const auto& u : sample_points(op, 20, rng)) CHECK(sgn(op.pfaffian().evaluate(u)) != 0);
  const auto never = [](std::span<const Rational>) { return false; };
  SamplingConfig cfg;
  cfg.max_retries = 10;
  CHECK_THROWS_AS(sample_points(op, 1, rng, cfg, never), DomainError);
}
