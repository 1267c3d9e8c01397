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
#include <vector>

#include "hho/qmatrix.hpp"
#include "hho/upoly.hpp"

namespace hho {

/// Dense matrix with entries in Q[x].
using UMatrix = std::vector<std::vector<UPoly>>;

/// L - x I for a rational matrix L.
UMatrix shifted(const QMatrix& L);

/// Linear algebra over Q[x]/(h) for a squarefree h. When a pivot candidate is
/// a zero divisor the modulus is split by a gcd and each part is redone, so
/// the result is a list of pairwise coprime moduli whose product is f, each
/// with its own rank and kernel basis (entries reduced modulo that part).
struct ResiduePiece {
  UPoly modulus;
  std::size_t rank = 0;
  std::vector<std::vector<UPoly>> kernel;
};

/// Throws DomainError if f is constant or not squarefree.
std::vector<ResiduePiece> eliminate_modulo(const UMatrix& m, const UPoly& f);

}  // namespace hho
