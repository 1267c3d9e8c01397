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

#include "hho/reference.hpp"

#include <vector>

#include "hho/error.hpp"

namespace hho::reference {

namespace {

MultiPoly laplace(const PolyMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  if (rows.empty()) return MultiPoly::constant(m.arity(), 1);
  const std::size_t r = rows.front();
  const std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
  MultiPoly sum(m.arity());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const MultiPoly& e = m(r, cols[k]);
    if (e.is_zero()) continue;
    std::vector<std::size_t> sub = cols;
    sub.erase(sub.begin() + static_cast<long>(k));
    const MultiPoly term = e * laplace(m, rest, sub);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

MultiPoly expand(const PolyMatrix& m, const std::vector<std::size_t>& idx) {
  if (idx.empty()) return MultiPoly::constant(m.arity(), 1);
  MultiPoly sum(m.arity());
  for (std::size_t t = 1; t < idx.size(); ++t) {
    const MultiPoly& e = m(idx[0], idx[t]);
    if (e.is_zero()) continue;
    std::vector<std::size_t> sub;
    for (std::size_t k = 1; k < idx.size(); ++k) {
      if (k != t) sub.push_back(idx[k]);
    }
    const MultiPoly term = e * expand(m, sub);
    if (t % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

MultiPoly det_laplace(const PolyMatrix& m) { return laplace(m, iota(m.dim()), iota(m.dim())); }

MultiPoly pfaffian_expansion(const PolyMatrix& m) {
  if (m.dim() % 2 != 0) throw DomainError("Pfaffian of an odd-dimensional matrix");
  if (!m.is_skew()) throw DomainError("Pfaffian of a non-skew matrix");
  return expand(m, iota(m.dim()));
}

}  // namespace hho::reference
