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
#include <span>
#include <string>
#include <vector>

#include "hho/execution.hpp"
#include "hho/operator.hpp"
#include "hho/ratfn.hpp"

namespace hho {

/// Generating data W_j = A_jl u^l + B_j of a compatible flux.
struct FluxParams {
  QMatrix A;
  RationalVector B;

  /// Throws ArityError on shape mismatch and DomainError for non-skew A.
  FluxParams(QMatrix A, RationalVector B);
  static FluxParams zero(std::size_t n) { return FluxParams(QMatrix(n, n), RationalVector(n)); }
  std::size_t n() const { return B.size(); }
};

/// u_t = (V(u))_x with V = g^{-1} (A u + B) + c, kept over the common
/// denominator P = Pf(g): V^i = N^i / P and V^i_{,j} = F^i_j / P^2.
class ConservativeSystem {
 public:
  ConservativeSystem(Hho2 op, FluxParams params, RationalVector constants, MultiPoly denominator,
                     std::vector<MultiPoly> numerators, std::vector<MultiPoly> jacobian_numerators);

  const Hho2& op() const { return op_; }
  std::size_t n() const { return op_.n(); }
  const FluxParams& params() const { return params_; }
  const RationalVector& constants() const { return constants_; }
  /// (A + T.c, B + g0 c): the data with g V = A' u + B' exactly.
  FluxParams effective_params() const;

  const MultiPoly& denominator() const { return den_; }
  const std::vector<MultiPoly>& numerators() const { return num_; }
  /// Row-major F^i_j over denominator()^2.
  const std::vector<MultiPoly>& jacobian_numerators() const { return jac_; }

  std::vector<RationalFn> flux() const;
  RationalFn velocity(std::size_t i, std::size_t j) const;
  /// True when every V^i_{,j} is constant.
  bool jacobian_constant() const;

 private:
  Hho2 op_;
  FluxParams params_;
  RationalVector constants_;
  MultiPoly den_;
  std::vector<MultiPoly> num_;
  std::vector<MultiPoly> jac_;
};

/// Throws DomainError for a degenerate operator and ArityError on size mismatch.
/// `constants` may be empty (all zero).
ConservativeSystem generate_flux(const Hho2& op, const FluxParams& params, const RationalVector& constants = {},
                                 Execution exec = Execution::parallel);

/// Value, first and second derivatives of V at a point.
/// Each reduced V^i = N^i/D^i has D^i | Pf(g) and deg N^i <= n/2.
struct FluxStructure {
  bool denominators_divide = true;
  int max_numerator_degree = 0;
  bool numerator_degree_ok = true;
  bool ok() const { return denominators_divide && numerator_degree_ok; }
};

FluxStructure flux_structure(const ConservativeSystem& sys);

struct FluxJet {
  RationalVector V;
  QMatrix J;  ///< J(i, p) = dV^i/du^p
  std::vector<QMatrix> H;  ///< H[i](p, l) = d^2 V^i / du^p du^l
};

/// Precomputes symbolic derivatives of N and P once, then evaluates jets.
class JetEvaluator {
 public:
  explicit JetEvaluator(const ConservativeSystem& sys);
  /// Throws PoleError where Pf(g) vanishes.
  FluxJet at(std::span<const Rational> u) const;

 private:
  std::size_t n_;
  MultiPoly P_;
  std::vector<MultiPoly> dP_;
  std::vector<MultiPoly> ddP_;  ///< [p*n + l]
  std::vector<MultiPoly> N_;
  std::vector<MultiPoly> dN_;  ///< [i*n + p]
  std::vector<MultiPoly> ddN_;  ///< [(i*n + p)*n + l]
};

struct CompatReport {
  bool symbolic = false;
  std::size_t points = 0;
  std::size_t first_checked = 0;
  std::size_t second_checked = 0;
  std::vector<std::array<std::size_t, 2>> first_failures;  ///< (p, q)
  std::vector<std::array<std::size_t, 3>> second_failures;  ///< (p, q, l)
  bool ok() const { return first_failures.empty() && second_failures.empty(); }
};

/// Symbolic check of
///   g_qj V^j_{,p} + g_pj V^j_{,q} = 0,
///   g_qk V^k_{,pl} + g_pq,k V^k_{,l} + g_qk,l V^k_{,p} = 0
/// after clearing the common denominator.
CompatReport check_compat(const Hho2& op, const std::vector<RationalFn>& V, Execution exec = Execution::parallel);
CompatReport check_compat(const ConservativeSystem& sys, Execution exec = Execution::parallel);
/// Same identities evaluated exactly at the given points.
CompatReport check_compat_pointwise(const ConservativeSystem& sys, const std::vector<RationalVector>& points,
                                    Execution exec = Execution::parallel);

/// Potential-coordinate density h = -(1/2 A_sl b^l_x + B_s) b^s. Variables:
/// b^1..b^n, then b^1_x..b^n_x, then b^1_xx..b^n_xx.
struct HamiltonianDensity {
  std::size_t n;
  MultiPoly h;
  std::vector<std::string> names() const;
};

HamiltonianDensity hamiltonian_density(const FluxParams& params);
/// Variational derivative dh/db^k - D_x(dh/db^k_x) for a first-order density.
/// Throws DomainError if h depends on b_xx.
std::vector<MultiPoly> euler_operator(const HamiltonianDensity& density);
/// True when the Euler operator returns -A_ks b^s_x - B_k for every k.
bool euler_check(const HamiltonianDensity& density, const FluxParams& params);

struct CasimirReport {
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  bool trivial() const { return kernel_dim == 0; }
};

/// Rank of g over the field of rational functions; kernel_dim counts
/// independent Casimir directions.
CasimirReport casimir_check(const Hho2& op);

struct PlueckerRelations {
  /// Row j, columns in pluecker_pairs(n+2) order: T_jab for p^{ab} (a<b<n),
  /// g0_jk for p^{k,n+1}, A_jl for p^{l,n+2}, B_j for p^{n+1,n+2} (1-based
  /// names; 0-based columns n and n+1).
  QMatrix coefficients;
  /// Relation j vanishes identically on the line through (u,1,0) and (V,0,1).
  std::vector<bool> holds;
  bool ok() const;
};

PlueckerRelations pluecker_relations(const ConservativeSystem& sys);

/// Dimension of the span of { V_(A,B,c) } measured as the rank of the linear
/// map (A, B, c) -> V evaluated at the given points.
struct FamilyDimension {
  std::size_t parameters = 0;  ///< n(n-1)/2 + n + n
  std::size_t rank = 0;
};
FamilyDimension family_dimension(const Hho2& op, const std::vector<RationalVector>& points);

}  // namespace hho
