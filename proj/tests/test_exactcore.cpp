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
#include "hho/expr.hpp"
#include "hho/polymatrix.hpp"
#include "hho/qmatrix.hpp"
#include "hho/random.hpp"
#include "hho/ratfn.hpp"
#include "hho/reference.hpp"
#include "hho/upoly.hpp"
#include "oracles.hpp"

using namespace hho;

namespace {

MultiPoly parse(const std::string& s, std::size_t arity = 3) {
  const auto names = default_names(arity);
  return parse_polynomial(s, names);
}

}  // namespace

TEST_CASE("rationals parse and print canonically", "[exactcore]") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational(" -10/5 ")) == "-2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("polynomial arithmetic laws on random inputs", "[exactcore][property]") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly a = oracle::random_poly(rng, 3, 3, 4);
    const MultiPoly b = oracle::random_poly(rng, 3, 3, 4);
    const MultiPoly c = oracle::random_poly(rng, 3, 2, 3);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    CHECK((a * b).derivative(1) == a.derivative(1) * b + a * b.derivative(1));
    const RationalVector u{rng.rational(5, 4), rng.rational(5, 4), rng.rational(5, 4)};
    CHECK((a * b).evaluate(u) == a.evaluate(u) * b.evaluate(u));
    if (!b.is_zero()) {
      const auto q = (a * b).divide_exact(b);
      REQUIRE(q);
      CHECK(*q == a);
    }
  }
}

TEST_CASE("gcd recovers a planted common factor", "[exactcore][property]") {
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const MultiPoly g = oracle::random_poly(rng, 3, 2, 3) + parse("u1");
    const MultiPoly a = oracle::random_poly(rng, 3, 2, 3) + parse("u2 + 1");
    const MultiPoly b = oracle::random_poly(rng, 3, 2, 3) + parse("u3 - 2");
    const MultiPoly d = gcd(g * a, g * b);
    // d is a multiple of g and divides both products
    CHECK((g * a).divide_exact(d).has_value());
    CHECK((g * b).divide_exact(d).has_value());
    CHECK(d.divide_exact(g.monic()).has_value());
  }
}

TEST_CASE("rational functions reduce and differentiate", "[exactcore]") {
  const MultiPoly x = parse("u1"), y = parse("u2");
  const RationalFn f(x * x - y * y, x - y);
  CHECK(f.is_polynomial());
  CHECK(f.numerator() == x + y);
  const RationalFn g(MultiPoly::constant(3, 1), x);
  CHECK(g.derivative(0) == RationalFn(MultiPoly::constant(3, -1), x * x));
  const RationalVector zero{0, 1, 1};
  CHECK_THROWS_AS(g.evaluate(zero), PoleError);
}

TEST_CASE("expression parser", "[exactcore]") {
  CHECK(parse("(u1 + 2*u2)^2 - 4*u2^2") == parse("u1^2 + 4*u1*u2"));
  CHECK(parse("1/2*u3 - -u3") == parse("3/2*u3"));
  try {
    parse("u1 + * u2");
    FAIL("no exception");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("u9"), ParseError);
  const auto names = default_names(1);
  CHECK(parse_polynomial("l1*u1", names, {{"l1", Rational(3)}}) == parse_polynomial("3*u1", names));
}

TEST_CASE("univariate division, squarefree parts and rational roots", "[exactcore][property]") {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> ca, cb;
    for (int k = 0; k < 6; ++k) ca.push_back(rng.rational(9, 3));
    for (int k = 0; k < 3; ++k) cb.push_back(rng.rational(9, 3));
    cb.push_back(1);
    const UPoly a(ca), b(cb);
    const auto [q, r] = a.divmod(b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
  const UPoly x = UPoly::x();
  const UPoly p = (x - UPoly::constant(1)).pow(3) * (x + UPoly::constant(Rational(1, 2))) * (x * x + UPoly::constant(1));
  const auto parts = squarefree_decomposition(p);
  UPoly product = UPoly::constant(p.leading());
  for (std::size_t k = 0; k < parts.size(); ++k) product = product * parts[k].pow(static_cast<unsigned>(k + 1));
  CHECK(product == p);
  REQUIRE(parts.size() >= 3);
  CHECK(parts[2] == x - UPoly::constant(1));
  const auto roots = rational_roots(p);
  REQUIRE(roots);
  CHECK(roots->size() == 2);
  const auto inv = (x + UPoly::constant(2)).inverse_mod(x * x + UPoly::constant(1));
  REQUIRE(inv);
  CHECK(((x + UPoly::constant(2)) * *inv % (x * x + UPoly::constant(1))) == UPoly::constant(1));
}

TEST_CASE("rational matrices against permutation expansion", "[exactcore][property]") {
  Rng rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.rational(6, 3);
    }
    const Rational det = oracle::det_leibniz(oracle::dense(m));
    CHECK(m.determinant() == det);
    if (sgn(det) != 0) {
      const auto inv = m.inverse();
      REQUIRE(inv);
      CHECK(m * *inv == QMatrix::identity(n));
      CHECK(m.rank() == n);
    } else {
      CHECK(!m.inverse());
    }
  }
  const QMatrix singular{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(singular.rank() == 2);
  const auto ker = singular.kernel();
  REQUIRE(ker.size() == 1);
  CHECK(singular * std::span<const Rational>(ker[0]) == RationalVector(3));
}

TEST_CASE("Pf(M)^2 = det(M) on random skew polynomial matrices", "[exactcore][property][pfaffian]") {
  Rng rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(rng.uniform(1, 4)) * 2;
    const PolyMatrix m = oracle::random_skew_poly(rng, dim, 3, 1);
    const MultiPoly pf = pfaffian(m);
    CHECK(pf * pf == det_bareiss(m));
    const RationalVector u{rng.rational(4, 3), rng.rational(4, 3), rng.rational(4, 3)};
    CHECK(pf.evaluate(u) == oracle::pfaffian_matchings(oracle::dense(m.evaluate(u))));
  }
}

TEST_CASE("serial, parallel and naive kernels agree", "[exactcore][pfaffian]") {
  Rng rng(16);
  for (std::size_t dim : {2u, 4u, 6u}) {
    const PolyMatrix m = oracle::random_skew_poly(rng, dim, 3, 2);
    const MultiPoly pf = pfaffian(m, Execution::parallel);
    CHECK(pf == pfaffian(m, Execution::serial));
    CHECK(pf == reference::pfaffian_expansion(m));
    const MultiPoly det = det_bareiss(m, Execution::serial);
    CHECK(det == det_bareiss(m, Execution::parallel));
    CHECK(det == reference::det_laplace(m));
  }
  // odd dimension: determinant of a skew matrix vanishes
  const PolyMatrix odd = oracle::random_skew_poly(rng, 5, 2, 2);
  CHECK(det_bareiss(odd).is_zero());
  CHECK_THROWS_AS(pfaffian(odd), DomainError);
}

TEST_CASE("skew inverse from Pfaffian minors", "[exactcore][pfaffian]") {
  Rng rng(17);
  for (std::size_t dim : {2u, 4u, 6u}) {
    const PolyMatrix m = oracle::random_skew_poly(rng, dim, 2, 1);
    const SkewInverse inv = inverse_skew(m);
    // M * numerators = Pf(M) * I
    CHECK(m * inv.numerators == inv.pfaffian * PolyMatrix::identity(dim, 2));
    CHECK(inv.numerators.is_skew());
  }
  PolyMatrix zero(4, 2);
  CHECK_THROWS_AS(inverse_skew(zero), DomainError);
}

TEST_CASE("generic rank of polynomial matrices", "[exactcore]") {
  Rng rng(18);
  const PolyMatrix m = oracle::random_skew_poly(rng, 6, 3, 1);
  CHECK(generic_rank(m) == 6);
  PolyMatrix low(3, 2);
  const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  low(0, 0) = x;
  low(0, 1) = y;
  low(1, 0) = x * y;
  low(1, 1) = y * y;
  CHECK(generic_rank(low) == 1);
}
