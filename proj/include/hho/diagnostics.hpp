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
#include <vector>

#include "hho/execution.hpp"
#include "hho/hydro.hpp"
#include "hho/ratfn.hpp"
#include "hho/upoly.hpp"

namespace hho {

/// Rank-(1,2) tensor X^i_{jk} stored at (i*n + j)*n + k.
class Tensor12 {
 public:
  explicit Tensor12(std::size_t n = 0) : n_(n), v_(n * n * n) {}
  std::size_t n() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return v_[(i * n_ + j) * n_ + k]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return v_[(i * n_ + j) * n_ + k]; }
  bool is_zero() const;
  /// X^i_{jk} == -X^i_{kj}
  bool antisymmetric() const;
  friend bool operator==(const Tensor12&, const Tensor12&) = default;

 private:
  std::size_t n_;
  std::vector<Rational> v_;
};

/// Jet of an arbitrary flux vector by symbolic differentiation.
FluxJet flux_jet(const std::vector<RationalFn>& V, std::span<const Rational> u);

/// N^i_jk = L^p_j dL^i_k/du^p - L^p_k dL^i_j/du^p - L^i_p (dL^p_k/du^j - dL^p_j/du^k)
/// with L = jet.J and its derivatives from jet.H.
Tensor12 nijenhuis(const FluxJet& jet);

/// g^{ia} (T_jal V^l_p V^p_k - T_kal V^l_p V^p_j - 2 T_alp V^l_k V^p_j), valid
/// for fluxes compatible with op.
Tensor12 nijenhuis_closed_form(const Hho2& op, const FluxJet& jet, std::span<const Rational> u);

/// H^i_jk = N^i_pr L^p_j L^r_k - N^p_jr L^i_p L^r_k - N^p_rk L^i_p L^r_j + N^p_jk L^i_r L^r_p
Tensor12 haantjes(const Tensor12& N, const QMatrix& L);

/// det(V^i_j - l delta) as the square of Pf(M(l)) / Pf(g), with
/// M_hj(l) = T_hji V^i + A'_hj - l g_hj. Variables u^1..u^n, then l.
struct CharpolySquare {
  RationalFn sqrt_charpoly;
  RationalFn charpoly;
  /// P * Mhat == g * F - l P^2 g with Mhat = P * M, F = P^2 * Jacobian;
  /// together with skewness of Mhat this proves det(V - l) = (Pf(M)/Pf(g))^2.
  bool matrix_identity = false;
  bool skew = false;
  /// sqrt_charpoly is a polynomial in l of degree n/2 with coefficients in Q(u).
  bool square_root_degree = false;
  bool ok() const { return matrix_identity && skew && square_root_degree; }
};

/// Symbolic in u; intended for n <= 6.
CharpolySquare charpoly_square(const ConservativeSystem& sys, Execution exec = Execution::parallel);

/// Both sides at one point, as univariate polynomials in l.
struct PointCharpoly {
  UPoly direct;  ///< det(J(u) - l I) by fraction-free elimination
  UPoly sqrt_charpoly;  ///< Pf(M(l))(u) / Pf(g)(u)
  bool equal() const { return direct == sqrt_charpoly * sqrt_charpoly; }
};

PointCharpoly charpoly_at(const ConservativeSystem& sys, const FluxJet& jet, std::span<const Rational> u);

/// One block of eigenvalues: the roots of `factor`, over which rank(V - l I)
/// is constant.
struct EigenBlock {
  UPoly factor;
  unsigned algebraic = 0;  ///< multiplicity of each root in det(V - l I)
  std::size_t geometric = 0;  ///< n - rank(V - l I)
  std::vector<Rational> rational_roots;
  bool exceptional() const { return algebraic > 2; }
  /// grad(l) . r == 0 for every eigenvector r; unset when the root is not
  /// simple in Pf(M(l)).
  std::optional<bool> linearly_degenerate;
};

struct PointDiagnosis {
  RationalVector u;
  bool nijenhuis_zero = false;
  bool nijenhuis_antisymmetric = false;
  bool nijenhuis_forms_agree = false;
  bool haantjes_zero = false;
  bool charpoly_consistent = false;
  UPoly sqrt_charpoly;
  std::vector<EigenBlock> blocks;
  bool diagonalizable = false;
  bool exceptional = false;
  bool linearly_degenerate = false;  ///< every checkable block passed
};

/// Exact diagnosis at u. Throws PoleError where Pf(g) vanishes.
PointDiagnosis diag_check(const ConservativeSystem& sys, const JetEvaluator& jets, std::span<const Rational> u);

struct DiagnosticsReport {
  std::vector<PointDiagnosis> points;
  bool all_haantjes_zero() const;
  bool all_nijenhuis_agree() const;
  bool all_charpoly_consistent() const;
  bool all_diagonalizable() const;
  bool all_linearly_degenerate() const;
  bool any_exceptional() const;
};

/// Per-point diagnosis; points run in parallel and results keep input order.
DiagnosticsReport diagnose(const ConservativeSystem& sys, const std::vector<RationalVector>& points,
                           Execution exec = Execution::parallel);

/// Floating-point variant: eigenvalues by Durand-Kerner on sqrt_charpoly and
/// numerical ranks with tolerance 10^(-digits/2). Not a certificate.
struct FloatEigen {
  std::string real;
  std::string imag;
  std::size_t geometric = 0;
};

struct FloatDiagnosis {
  unsigned digits = 50;
  std::vector<FloatEigen> eigenvalues;  ///< distinct roots of sqrt_charpoly
  bool diagonalizable = false;
  bool converged = false;
};

FloatDiagnosis diag_check_float(const ConservativeSystem& sys, const FluxJet& jet, std::span<const Rational> u,
                                unsigned digits = 50);

struct LinearityReport {
  bool linear = false;  ///< the Jacobian is constant
  /// Always true for compatible systems: the associated line congruence is
  /// linear.
  bool linearly_degenerate = true;
  std::size_t spot_points = 0;
  std::size_t spot_blocks = 0;  ///< eigenvalue blocks where the direct check applied
  bool spot_ok = true;
};

LinearityReport linearity_report(const ConservativeSystem& sys, const std::vector<RationalVector>& points,
                                 Execution exec = Execution::parallel);

}  // namespace hho
