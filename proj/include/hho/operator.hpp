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

#include "hho/execution.hpp"
#include "hho/poly.hpp"
#include "hho/polymatrix.hpp"
#include "hho/qmatrix.hpp"
#include "hho/threeform.hpp"

namespace hho {

/// Second-order homogeneous Hamiltonian operator in flat coordinates,
/// described by its covariant metric g_ij(u) = T_ijk u^k + g0_ij.
///
/// Construction checks shapes and skewness and computes Pf(g). Degenerate
/// operators (Pf(g) == 0) are representable; operations that need g^{-1}
/// reject them.
class Hho2 {
 public:
  /// Throws ArityError for odd or mismatched sizes, DomainError for non-skew g0.
  Hho2(SkewTensor3 T, QMatrix g0);
  /// Accepts a dense n^3 array for T; throws DomainError if it is not totally skew.
  static Hho2 from_dense(std::size_t n, std::span<const Rational> T, const QMatrix& g0);

  std::size_t n() const { return T_.dim(); }
  const SkewTensor3& T() const { return T_; }
  const QMatrix& g0() const { return g0_; }
  /// g(u) as a polynomial matrix in u^1..u^n.
  const PolyMatrix& metric() const { return metric_; }
  QMatrix metric_at(std::span<const Rational> u) const;
  const MultiPoly& pfaffian() const { return pfaffian_; }
  bool is_degenerate() const { return pfaffian_.is_zero(); }

  friend bool operator==(const Hho2& a, const Hho2& b) { return a.T_ == b.T_ && a.g0_ == b.g0_; }

 private:
  SkewTensor3 T_;
  QMatrix g0_;
  PolyMatrix metric_;
  MultiPoly pfaffian_;
};

struct ValidationReport {
  bool tensor_skew = false;
  bool g0_skew = false;
  MultiPoly pfaffian;
  bool degenerate = false;
  bool ok() const { return tensor_skew && g0_skew; }
};

ValidationReport validate(const Hho2& op);

/// Packs (T, g0) into one totally skew tensor of dimension n+1 with
/// T_{jk,n+1} = g0_jk.
SkewTensor3 extend_tensor(const Hho2& op);
/// Inverse of extend_tensor.
Hho2 split_tensor(const SkewTensor3& extended);

/// Affine factor A(u) = a^{n+1}_k u^k + a^{n+1}_{n+1} of a projective map.
MultiPoly affine_factor(const LinearMap& a);

/// Operator whose extended tensor is the pullback of op's by a.
/// transform(transform(op, a), b) == transform(op, a * b).
Hho2 transform(const Hho2& op, const LinearMap& a);

struct ConformalCheck {
  bool identity_holds = false;  ///< J^T g(u~) J == A^{-3} g'(u)
  bool pfaffian_holds = false;  ///< Pf(g'(u)) == A^{3n/2} det(J) Pf(g(u~))
  bool jacobian_det_holds = false;  ///< det(J) == det(a) / A^{n+1}
  Rational factor;  ///< A(u)
  RationalVector image;  ///< u~
  bool ok() const { return identity_holds && pfaffian_holds && jacobian_det_holds; }
};

/// Pointwise check of the conformal law. The point u lives in the chart of
/// op' = transform(op, a); the projective map u -> u~ = (a(u,1))_{1..n} / A(u)
/// lands in the chart of op. Throws PoleError when A(u) == 0.
ConformalCheck conformal_check(const Hho2& op, const LinearMap& a, std::span<const Rational> u);

}  // namespace hho
