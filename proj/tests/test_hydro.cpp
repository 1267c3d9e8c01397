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
#include "hho/hydro.hpp"
#include "hho/random.hpp"
#include "oracles.hpp"

using namespace hho;

namespace {

const ParamValues kParams{{"lambda1", 2}, {"lambda2", -1}, {"lambda3", 3}, {"lambda4", Rational(1, 2)}};

Hho2 catalog_op(const std::string& id) {
  ParamValues p;
  for (const auto& name : catalog_entry(id).parameters) p[name] = kParams.at(name);
  return build(id, p);
}

}  // namespace

TEST_CASE("flux and its derivatives match implicit differentiation", "[hydro][property]") {
  Rng rng(51);
  for (const char* id : {"n2", "n4-open", "n6-X", "n6-IX", "n6-VIII", "n8-fam1"}) {
    const Hho2 op = catalog_op(id);
    const std::size_t n = op.n();
    const FluxParams params = random_flux_params(rng, n);
    RationalVector c(n);
    for (auto& x : c) x = rng.rational(3, 2);
    const auto sys = generate_flux(op, params, c);
    const JetEvaluator jets(sys);
    const auto V = sys.flux();
    for (const auto& u : sample_points(op, 3, rng)) {
      const auto expect = oracle::flux_jet(op, params.A, params.B, c, u);
      const FluxJet jet = jets.at(u);
      CHECK(jet.V == expect.V);
      CHECK(oracle::dense(jet.J) == expect.J);
      for (std::size_t i = 0; i < n; ++i) CHECK(oracle::dense(jet.H[i]) == expect.H[i]);
      for (std::size_t i = 0; i < n; ++i) CHECK(V[i].evaluate(u) == expect.V[i]);
    }
  }
}

TEST_CASE("generated systems satisfy the compatibility equations", "[hydro]") {
  Rng rng(52);
  for (const char* id : {"n2", "n4-open", "n6-VII", "n6-VI", "n6-VIII"}) {
    const auto sys = generate_flux(catalog_op(id), random_flux_params(rng, catalog_entry(id).n));
    const auto r = check_compat(sys);
    CHECK(r.symbolic);
    CHECK(r.ok());
    const auto pw = check_compat_pointwise(sys, sample_points(sys.op(), 4, rng));
    CHECK(pw.ok());
    CHECK(pw.points == 4);
  }
}

TEST_CASE("a perturbed flux violates compatibility", "[hydro]") {
  Rng rng(53);
  const Hho2 op = catalog_op("n6-X");
  const auto sys = generate_flux(op, random_flux_params(rng, 6));
  auto V = sys.flux();
  V[0] = V[0] + RationalFn(MultiPoly::variable(6, 1) * MultiPoly::variable(6, 1));
  CHECK_FALSE(check_compat(op, V).ok());
}

TEST_CASE("flux denominators divide the Pfaffian", "[hydro]") {
  Rng rng(54);
  for (const auto& e : catalog_entries()) {
    if (e.degenerate) continue;
    const Hho2 op = catalog_op(e.id);
    const auto sys = generate_flux(op, random_flux_params(rng, e.n));
    const auto fs = flux_structure(sys);
    CHECK(fs.ok());
    CHECK(fs.max_numerator_degree <= static_cast<int>(e.n / 2));
  }
}

TEST_CASE("n=2 and n=4 systems are linear", "[hydro]") {
  Rng rng(55);
  for (const char* id : {"n2", "n4-open"}) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto sys = generate_flux(catalog_op(id), random_flux_params(rng, catalog_entry(id).n));
      CHECK(sys.jacobian_constant());
    }
  }
  const auto sys = generate_flux(catalog_op("n6-X"), random_flux_params(rng, 6));
  CHECK_FALSE(sys.jacobian_constant());
}

TEST_CASE("degenerate operators cannot generate a flux", "[hydro]") {
  CHECK_THROWS_AS(generate_flux(build("n4-degenerate"), FluxParams::zero(4)), DomainError);
}

TEST_CASE("Pluecker linear relations", "[hydro]") {
  Rng rng(56);
  for (const char* id : {"n2", "n4-open", "n6-X", "n6-IX", "n8-fam2-e1"}) {
    const auto sys = generate_flux(catalog_op(id), random_flux_params(rng, catalog_entry(id).n), RationalVector{});
    CHECK(pluecker_relations(sys).ok());
  }
}

TEST_CASE("dimension of the family of fluxes", "[hydro]") {
  Rng rng(57);
  for (const char* id : {"n2", "n4-open", "n6-X"}) {
    const Hho2 op = catalog_op(id);
    const std::size_t n = op.n();
    const auto fd = family_dimension(op, sample_points(op, n + 2, rng));
    CHECK(fd.parameters == n * (n - 1) / 2 + 2 * n);
    CHECK(fd.rank == n * (n + 1) / 2);
  }
}

TEST_CASE("Hamiltonian density and Casimirs", "[hydro]") {
  Rng rng(58);
  for (std::size_t n : {2u, 4u, 6u}) {
    const FluxParams p = random_flux_params(rng, n);
    const auto h = hamiltonian_density(p);
    CHECK(h.names().size() == 3 * n);
    CHECK(euler_check(h, p));
    const auto e = euler_operator(h);
    // by hand: the b^k coefficient is -B_k
    for (std::size_t k = 0; k < n; ++k) CHECK(e[k].constant_term() == -p.B[k]);
  }
  for (const auto& e : catalog_entries()) {
    if (e.degenerate || !e.parameters.empty()) continue;
    const auto c = casimir_check(build(e.id));
    CHECK(c.trivial());
    CHECK(c.rank == e.n);
  }
  CHECK_FALSE(casimir_check(build("n4-degenerate")).trivial());
}
