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

// Independent reference computations for the tests. Nothing here calls the
// library's kernels: determinants, Pfaffians, pullbacks, inverses and flux
// jets are recomputed from their definitions on plain dense arrays.

#include <cstdint>
#include <vector>

#include "hho/operator.hpp"
#include "hho/poly.hpp"
#include "hho/polymatrix.hpp"
#include "hho/random.hpp"
#include "hho/rational.hpp"

namespace oracle {

using hho::Rational;
using Dense = std::vector<std::vector<Rational>>;
using Dense3 = std::vector<Rational>;  // (i*d + j)*d + k

Dense dense(const hho::QMatrix& m);

/// Sum over permutations.
Rational det_leibniz(const Dense& m);
/// Sum over perfect matchings with the crossing sign.
Rational pfaffian_matchings(const Dense& m);
/// Gauss-Jordan on a private copy; empty result when singular.
Dense inverse(const Dense& m);
Dense multiply(const Dense& a, const Dense& b);
std::vector<Rational> apply(const Dense& a, const std::vector<Rational>& v);

/// w'_{lmn} = sum over all (a, b, c) of w_abc a^a_l a^b_m a^c_n.
Dense3 pullback(const Dense3& w, const Dense& a, std::size_t d);
Dense3 form_dense(const hho::SkewTensor3& form);

/// g_ij(u) = T_ijk u^k + g0_ij from the dense operator data.
Dense metric_at(const hho::Hho2& op, const std::vector<Rational>& u);

struct Jet {
  std::vector<Rational> V;
  Dense J;                  // J[i][p] = dV^i/du^p
  std::vector<Dense> H;     // H[i][p][l]
};

/// From g V = A u + B (plus constants c), differentiated implicitly:
/// g J = A - T.V',  g H_pl = -(T_.kl J^k_p + T_.kp J^k_l), V' = V - c.
Jet flux_jet(const hho::Hho2& op, const hho::QMatrix& A, const std::vector<Rational>& B,
             const std::vector<Rational>& c, const std::vector<Rational>& u);

/// Nijenhuis torsion of L from brackets of coordinate fields:
/// N(e_j, e_k) = [Le_j, Le_k] - L[Le_j, e_k] - L[e_j, Le_k].
Dense3 nijenhuis_brackets(const Jet& jet);
/// H(X, Y) = L^2 N(X, Y) + N(LX, LY) - L N(LX, Y) - L N(X, LY), by bilinearity.
Dense3 haantjes_bilinear(const Dense3& N, const Dense& L);

/// Random skew matrix whose entries are sparse polynomials of small degree.
hho::PolyMatrix random_skew_poly(hho::Rng& rng, std::size_t dim, std::size_t arity, int max_degree);
hho::MultiPoly random_poly(hho::Rng& rng, std::size_t arity, int max_degree, std::size_t terms);

/// det(J(u) - l I) coefficients by evaluating the determinant at deg+1
/// integer values of l and interpolating (Lagrange).
std::vector<Rational> charpoly_interpolated(const Dense& J);

}  // namespace oracle
