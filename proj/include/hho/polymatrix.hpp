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
#include <span>
#include <vector>

#include "hho/execution.hpp"
#include "hho/poly.hpp"
#include "hho/qmatrix.hpp"
#include "hho/ratfn.hpp"

namespace hho {

/// Square matrix of polynomials sharing one ring. Skewness is a predicate,
/// never assumed.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t dim, std::size_t arity);
  static PolyMatrix identity(std::size_t dim, std::size_t arity);
  /// Constant matrix viewed in a polynomial ring.
  static PolyMatrix from_rational(const QMatrix& m, std::size_t arity);

  std::size_t dim() const { return dim_; }
  std::size_t arity() const { return arity_; }

  MultiPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const MultiPoly& s, const PolyMatrix& a);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  bool is_skew() const;
  bool is_zero() const;
  QMatrix evaluate(std::span<const Rational> point) const;

 private:
  std::size_t dim_ = 0;
  std::size_t arity_ = 0;
  std::vector<MultiPoly> entries_;
};

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Row updates of each elimination step run in parallel under Execution::parallel.
MultiPoly det_bareiss(const PolyMatrix& m, Execution exec = Execution::parallel);

/// Pfaffian with Pf([[0,1],[-1,0]]) = 1, extended by first-row expansion.
/// Evaluated bottom-up over index subsets; subsets of equal size are
/// independent and run in parallel. Throws DomainError for odd dimension or
/// non-skew input.
MultiPoly pfaffian(const PolyMatrix& m, Execution exec = Execution::parallel);

/// Inverse of a skew matrix as numerator polynomials over the common
/// denominator Pf(M): inverse(i, j) = numerators(i, j) / pfaffian.
struct SkewInverse {
  MultiPoly pfaffian;
  PolyMatrix numerators;

  /// Reduced entry; its denominator divides the Pfaffian.
  RationalFn entry(std::size_t i, std::size_t j) const;
  std::vector<RationalFn> reduced() const;
};

/// Throws DomainError for odd dimension, non-skew input, or Pf(M) = 0.
SkewInverse inverse_skew(const PolyMatrix& m, Execution exec = Execution::parallel);

/// Rank over the field of rational functions.
std::size_t generic_rank(const PolyMatrix& m);

}  // namespace hho
