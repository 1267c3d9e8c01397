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

#include <span>
#include <string>

#include "hho/poly.hpp"

namespace hho {

/// Reduced quotient of polynomials: gcd(num, den) = 1 and the denominator's
/// leading coefficient is +1. Zero is 0/1.
class RationalFn {
 public:
  explicit RationalFn(std::size_t arity = 0);
  explicit RationalFn(MultiPoly numerator);
  /// Throws DomainError for a zero denominator.
  RationalFn(MultiPoly numerator, MultiPoly denominator);
  /// Skips the gcd; the caller guarantees gcd(numerator, denominator) = 1.
  static RationalFn from_coprime(MultiPoly numerator, MultiPoly denominator);

  std::size_t arity() const { return num_.arity(); }
  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  RationalFn operator-() const;
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFn derivative(std::size_t var) const;
  /// Throws PoleError when the denominator vanishes at the point.
  Rational evaluate(std::span<const Rational> point) const;

  std::string to_string(std::span<const std::string> names) const;
  std::string to_string() const;

 private:
  RationalFn(MultiPoly numerator, MultiPoly denominator, bool coprime);

  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace hho
