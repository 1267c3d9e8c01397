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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hho/poly.hpp"
#include "hho/rational.hpp"

namespace hho {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coefficients);
  static UPoly constant(const Rational& c);
  static UPoly x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& s, const UPoly& a);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// (quotient, remainder); throws DomainError for a zero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
  UPoly operator%(const UPoly& divisor) const { return divmod(divisor).second; }
  /// Exact quotient; throws DomainError when the remainder is nonzero.
  UPoly operator/(const UPoly& divisor) const;

  UPoly derivative() const;
  UPoly monic() const;
  Rational evaluate(const Rational& at) const;
  UPoly pow(unsigned e) const;

  /// Multiplicative inverse modulo `modulus`, if gcd(*this, modulus) = 1.
  std::optional<UPoly> inverse_mod(const UPoly& modulus) const;

  /// Polynomial in a one-variable MultiPoly ring and back.
  static UPoly from_multipoly(const MultiPoly& p);
  MultiPoly to_multipoly() const;

  std::string to_string(const std::string& var = "lambda") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd (gcd(0, 0) = 0).
UPoly gcd(UPoly a, UPoly b);

/// Yun's algorithm: returns f_1, f_2, ... (monic, squarefree, pairwise coprime)
/// with p = lc(p) * prod f_k^k. Trailing entries may be 1.
std::vector<UPoly> squarefree_decomposition(const UPoly& p);

/// Rational roots of p found by the rational-root test. Gives up (nullopt)
/// when the integer content is too large to enumerate divisors.
std::optional<std::vector<Rational>> rational_roots(const UPoly& p);

}  // namespace hho
