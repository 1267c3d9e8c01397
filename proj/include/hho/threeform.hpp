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

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hho/qmatrix.hpp"
#include "hho/rational.hpp"

namespace hho {

using Triple = std::array<std::size_t, 3>;

/// Totally skew rank-3 tensor over Q. Only strictly increasing index triples
/// (0-based) with nonzero coefficient are stored; every other component is
/// recovered by skew extension. Used both for 3-forms and for the T part of
/// an operator.
class SkewTensor3 {
 public:
  explicit SkewTensor3(std::size_t dim = 0) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  const std::map<Triple, Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Component for any index order; zero when an index repeats.
  Rational operator()(std::size_t i, std::size_t j, std::size_t k) const;
  /// Sets the component (i,j,k) and, implicitly, all its permutations.
  /// Throws DomainError for a nonzero value on a repeated index.
  void set(std::size_t i, std::size_t j, std::size_t k, const Rational& value);
  void add(std::size_t i, std::size_t j, std::size_t k, const Rational& value);

  /// Full dim^3 array, index (i*dim + j)*dim + k.
  std::vector<Rational> dense() const;
  /// Throws DomainError when the array is not totally skew.
  static SkewTensor3 from_dense(std::size_t dim, std::span<const Rational> values);

  friend bool operator==(const SkewTensor3&, const SkewTensor3&) = default;
  friend SkewTensor3 operator+(const SkewTensor3& a, const SkewTensor3& b);
  friend SkewTensor3 operator*(const Rational& s, const SkewTensor3& a);

 private:
  void check_index(std::size_t i, std::size_t j, std::size_t k) const;

  std::size_t dim_;
  std::map<Triple, Rational> coeffs_;
};

/// A 3-form sum over i<j<k of coeff * dv^i ^ dv^j ^ dv^k.
using ThreeForm = SkewTensor3;

/// Invertible linear map a^l_m of Q^{n+1}, row l, column m.
class LinearMap {
 public:
  /// Throws DomainError for a singular or non-square matrix.
  explicit LinearMap(QMatrix a);
  static LinearMap identity(std::size_t dim) { return LinearMap(QMatrix::identity(dim)); }

  std::size_t dim() const { return a_.rows(); }
  const QMatrix& matrix() const { return a_; }
  const Rational& determinant() const { return det_; }
  bool is_special() const { return det_ == 1; }

  friend LinearMap operator*(const LinearMap& a, const LinearMap& b) { return LinearMap(a.a_ * b.a_); }
  friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.a_ == b.a_; }

 private:
  QMatrix a_;
  Rational det_;
};

/// Multilinear pullback w'_{lmn} = w_{abc} a^a_l a^b_m a^c_n.
/// Composition: pullback(pullback(w, a), b) == pullback(w, a * b).
ThreeForm pullback(const ThreeForm& form, const LinearMap& a);

struct ChartData {
  SkewTensor3 T;
  QMatrix g0;
};

/// T_ijk = 3 w_ijk and g0_ij = 3 w_{ij,n+1} in the chart v^{n+1} = 1.
ChartData chart_restrict(const ThreeForm& form);

/// Inverse of chart_restrict. Throws DomainError for non-skew g0 and
/// ArityError for mismatched sizes.
ThreeForm embed(const SkewTensor3& T, const QMatrix& g0);

/// Plucker unknowns p^{mn}, m < n, in the column order of congruence_system.
std::vector<std::pair<std::size_t, std::size_t>> pluecker_pairs(std::size_t dim);

/// Coefficients of the linear conditions w_{lmn} p^{mn} = 0 (sum over all m, n),
/// one row per l and one column per pair m < n. Each entry is 2 w_{lmn}.
QMatrix congruence_system(const ThreeForm& form);

}  // namespace hho
