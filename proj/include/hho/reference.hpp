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

#include "hho/poly.hpp"
#include "hho/polymatrix.hpp"

/// Naive serial kernels. They are slow on purpose: no pivoting tricks, no
/// memoization, no threads. Tests use them as oracles and the benchmark as a
/// baseline.
namespace hho::reference {

/// Cofactor expansion along the first row.
MultiPoly det_laplace(const PolyMatrix& m);

/// Plain recursive first-row Pfaffian expansion, no subset table.
MultiPoly pfaffian_expansion(const PolyMatrix& m);

}  // namespace hho::reference
