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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hho/monomial.hpp"
#include "hho/rational.hpp"

namespace hho {

/// Sparse multivariate polynomial over Q in a fixed number of variables.
///
/// Terms are kept sorted in strictly decreasing graded-lex order with no zero
/// coefficients, so structural equality is mathematical equality. Binary
/// operations require equal arity and throw ArityError otherwise.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  explicit MultiPoly(std::size_t arity = 0);
  /// Canonicalizes: sorts, merges equal monomials, drops zeros.
  MultiPoly(std::size_t arity, std::vector<Term> terms);

  static MultiPoly constant(std::size_t arity, const Rational& value);
  static MultiPoly variable(std::size_t arity, std::size_t index);

  std::size_t arity() const { return arity_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(std::size_t var) const;
  Rational constant_term() const;
  /// Coefficient of the largest monomial; zero for the zero polynomial.
  Rational leading_coefficient() const;
  const Monomial& leading_monomial() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& factor);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned exponent) const;
  MultiPoly derivative(std::size_t var) const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Replaces variable `var` by a constant; arity is unchanged.
  MultiPoly substitute(std::size_t var, const Rational& value) const;
  /// Replaces variable `var` by a polynomial of the same arity.
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
  /// Same polynomial viewed in a ring with more variables.
  MultiPoly with_arity(std::size_t arity) const;

  /// Exact quotient when `divisor` divides *this, otherwise nullopt.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;
  /// Like divide_exact but throws DomainError on a nonzero remainder.
  MultiPoly operator/(const MultiPoly& divisor) const;

  /// Scaled so the leading coefficient is 1 (zero stays zero).
  MultiPoly monic() const;

  /// Coefficients with respect to `var`: result[k] multiplies var^k.
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;

  /// Human-readable form such as "u1*u4 + u2*u5 - 1".
  std::string to_string(std::span<const std::string> names) const;
  /// Uses u1..un as variable names.
  std::string to_string() const;

 private:
  struct Canonical {};
  MultiPoly(std::size_t arity, std::vector<Term> terms, Canonical) : arity_(arity), terms_(std::move(terms)) {}

  void require_same_arity(const MultiPoly& other) const;

  std::size_t arity_;
  std::vector<Term> terms_;
};

/// Greatest common divisor normalized to leading coefficient 1 (gcd(0,0)=0).
/// Recursive primitive-PRS over Q[x_1..x_k]; adequate for the low degrees here.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// Default variable names u1..un followed by any extra names.
std::vector<std::string> default_names(std::size_t arity);

}  // namespace hho
