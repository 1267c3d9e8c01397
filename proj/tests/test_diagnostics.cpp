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
#include "hho/diagnostics.hpp"
#include "hho/random.hpp"
#include "hho/residue.hpp"
#include "oracles.hpp"

using namespace hho;

namespace {

oracle::Dense3 flat(const Tensor12& t) {
  const std::size_t n = t.n();
  oracle::Dense3 out(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out[(i * n + j) * n + k] = t(i, j, k);
    }
  }
  return out;
}

oracle::Jet to_oracle(const FluxJet& jet) {
  oracle::Jet o;
  o.V = jet.V;
  o.J = oracle::dense(jet.J);
  for (const auto& h : jet.H) o.H.push_back(oracle::dense(h));
  return o;
}

// V = (u1 u2 + u1^2 u3, u2 u3 + u2^2 u1, u3 u1 + u3^2 u2): a generic non-Hamiltonian flux.
std::vector<RationalFn> cyclic_flux(std::size_t n) {
  std::vector<RationalFn> V;
  for (std::size_t i = 0; i < n; ++i) {
    const MultiPoly a = MultiPoly::variable(n, i), b = MultiPoly::variable(n, (i + 1) % n),
                    c = MultiPoly::variable(n, (i + 2) % n);
    V.emplace_back(a * b + a * a * c);
  }
  return V;
}

}  // namespace

TEST_CASE("Nijenhuis and Haantjes tensors against the bracket definitions", "[diagnostics][property]") {
  Rng rng(61);
  for (std::size_t n : {2u, 3u, 4u}) {
    const auto V = cyclic_flux(n);
    for (int trial = 0; trial < 3; ++trial) {
      const RationalVector u = random_point(rng, n);
      const FluxJet jet = flux_jet(V, u);
      const Tensor12 N = nijenhuis(jet);
      const auto expect = oracle::nijenhuis_brackets(to_oracle(jet));
      CHECK(flat(N) == expect);
      CHECK(N.antisymmetric());
      CHECK(flat(haantjes(N, jet.J)) == oracle::haantjes_bilinear(expect, oracle::dense(jet.J)));
    }
  }
}

TEST_CASE("Haantjes tensor vanishes in dimension two but not in general", "[diagnostics]") {
  const RationalVector u2{2, 3}, u3{2, 3, 4};
  const FluxJet j2 = flux_jet(cyclic_flux(2), u2);
  CHECK_FALSE(nijenhuis(j2).is_zero());
  CHECK(haantjes(nijenhuis(j2), j2.J).is_zero());
  const FluxJet j3 = flux_jet(cyclic_flux(3), u3);
  CHECK_FALSE(haantjes(nijenhuis(j3), j3.J).is_zero());
}

TEST_CASE("closed form of the Nijenhuis tensor for compatible systems", "[diagnostics][property]") {
  Rng rng(62);
  for (const char* id : {"n4-open", "n6-X", "n6-IX", "n6-VIII", "n6-VII"}) {
    const Hho2 op = build(id);
    const auto sys = generate_flux(op, random_flux_params(rng, op.n()));
    const JetEvaluator jets(sys);
    for (const auto& u : sample_points(op, 3, rng)) {
      const FluxJet jet = jets.at(u);
      CHECK(nijenhuis(jet) == nijenhuis_closed_form(op, jet, u));
    }
  }
}

TEST_CASE("characteristic polynomial is a square", "[diagnostics]") {
  Rng rng(63);
  for (const char* id : {"n2", "n4-open", "n6-VI", "n6-VII", "n6-VIII"}) {
    const Hho2 op = build(id);
    const auto sys = generate_flux(op, random_flux_params(rng, op.n()));
    const auto cs = charpoly_square(sys);
    CHECK(cs.ok());
    CHECK(cs.charpoly == cs.sqrt_charpoly * cs.sqrt_charpoly);
    const JetEvaluator jets(sys);
    for (const auto& u : sample_points(op, 2, rng)) {
      const FluxJet jet = jets.at(u);
      const auto pc = charpoly_at(sys, jet, u);
      CHECK(pc.equal());
      CHECK(pc.direct.coefficients() == oracle::charpoly_interpolated(oracle::dense(jet.J)));
      // the symbolic square root specializes to the pointwise one
      RationalVector ul = u;
      for (std::size_t k = 0; k <= op.n() / 2; ++k) {
        ul.push_back(Rational(static_cast<long>(k)));
        CHECK(cs.sqrt_charpoly.evaluate(ul) == pc.sqrt_charpoly.evaluate(Rational(static_cast<long>(k))));
        ul.pop_back();
      }
    }
  }
}

TEST_CASE("eigenvalue blocks at sample points", "[diagnostics]") {
  Rng rng(64);
  const Hho2 op = build("n6-VIII");
  const auto sys = generate_flux(op, random_flux_params(rng, 6));
  const auto report = diagnose(sys, sample_points(op, 4, rng));
  CHECK(report.all_charpoly_consistent());
  CHECK(report.all_nijenhuis_agree());
  for (const auto& p : report.points) {
    std::size_t total = 0;
    for (const auto& b : p.blocks) {
      CHECK(b.algebraic % 2 == 0);
      total += static_cast<std::size_t>(b.factor.degree()) * b.algebraic;
    }
    CHECK(total == 6);
  }
}

TEST_CASE("serial and parallel diagnoses agree", "[diagnostics]") {
  Rng rng(65);
  const Hho2 op = build("n6-IX");
  const auto sys = generate_flux(op, random_flux_params(rng, 6));
  const auto points = sample_points(op, 4, rng);
  const auto a = diagnose(sys, points, Execution::serial);
  const auto b = diagnose(sys, points, Execution::parallel);
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t k = 0; k < a.points.size(); ++k) {
    CHECK(a.points[k].u == b.points[k].u);
    CHECK(a.points[k].sqrt_charpoly == b.points[k].sqrt_charpoly);
    CHECK(a.points[k].haantjes_zero == b.points[k].haantjes_zero);
    CHECK(a.points[k].diagonalizable == b.points[k].diagonalizable);
  }
}

TEST_CASE("linear algebra modulo a squarefree polynomial", "[diagnostics]") {
  // L has eigenvalue 1 twice (one Jordan block) and roots of x^2 - 2
  const QMatrix L{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 2}, {0, 0, 1, 0}};
  const UPoly x = UPoly::x();
  const auto jordan = eliminate_modulo(shifted(L), x - UPoly::constant(1));
  REQUIRE(jordan.size() == 1);
  CHECK(jordan[0].rank == 3);
  const auto irrational = eliminate_modulo(shifted(L), x * x - UPoly::constant(2));
  REQUIRE(irrational.size() == 1);
  CHECK(irrational[0].rank == 3);
  // a reducible modulus splits into its factors
  const auto split = eliminate_modulo(shifted(L), (x - UPoly::constant(1)) * (x + UPoly::constant(5)));
  std::size_t pieces_with_kernel = 0;
  for (const auto& p : split) pieces_with_kernel += p.rank < 4;
  CHECK(pieces_with_kernel == 1);
}

TEST_CASE("floating-point eigenvalues agree with exact roots", "[diagnostics]") {
  Rng rng(66);
  const Hho2 op = build("n2");
  const auto sys = generate_flux(op, random_flux_params(rng, 2));
  const RationalVector u{1, 2};
  const FluxJet jet = JetEvaluator(sys).at(u);
  const auto f = diag_check_float(sys, jet, u, 40);
  CHECK(f.converged);
  CHECK(f.diagonalizable);
  REQUIRE(f.eigenvalues.size() == 1);
  const auto exact = diag_check(sys, JetEvaluator(sys), u);
  REQUIRE(exact.blocks.size() == 1);
  REQUIRE(exact.blocks[0].rational_roots.size() == 1);
  CHECK(std::stod(f.eigenvalues[0].real) == Catch::Approx(exact.blocks[0].rational_roots[0].get_d()));
}

TEST_CASE("linear degeneracy spot checks", "[diagnostics]") {
  Rng rng(67);
  for (const char* id : {"n4-open", "n6-X"}) {
    const Hho2 op = build(id);
    const auto sys = generate_flux(op, random_flux_params(rng, op.n()));
    const auto r = linearity_report(sys, sample_points(op, 3, rng));
    CHECK(r.spot_ok);
    CHECK(r.spot_blocks > 0);
    CHECK(r.linearly_degenerate);
  }
}
