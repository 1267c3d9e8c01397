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

#include "hho/residue.hpp"

#include <deque>
#include <optional>
#include <variant>
#include <utility>

#include "hho/error.hpp"

namespace hho {

UMatrix shifted(const QMatrix& L) {
  if (!L.square()) throw ArityError("shifted matrix must be square");
  UMatrix m(L.rows(), std::vector<UPoly>(L.cols()));
  for (std::size_t i = 0; i < L.rows(); ++i) {
    for (std::size_t j = 0; j < L.cols(); ++j) {
      m[i][j] = UPoly::constant(L(i, j));
      if (i == j) m[i][j] = m[i][j] - UPoly::x();
    }
  }
  return m;
}

namespace {

struct Split {
  UPoly a, b;
};

// RREF over Q[x]/(h); either finishes or reports a factorization of h.
std::variant<ResiduePiece, Split> attempt(const UMatrix& input, const UPoly& h) {
  const std::size_t rows = input.size();
  const std::size_t cols = rows == 0 ? 0 : input[0].size();
  UMatrix m(rows, std::vector<UPoly>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = input[i][j] % h;
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::optional<std::size_t> found;
    UPoly inverse;
    for (std::size_t r = row; r < rows; ++r) {
      if (m[r][col].is_zero()) continue;
      const UPoly g = gcd(m[r][col], h);
      if (g.degree() > 0) return Split{g, h / g};
      inverse = *m[r][col].inverse_mod(h);
      found = r;
      break;
    }
    if (!found) continue;
    std::swap(m[*found], m[row]);
    for (std::size_t j = col; j < cols; ++j) m[row][j] = (m[row][j] * inverse) % h;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const UPoly f = m[r][col];
      for (std::size_t j = col; j < cols; ++j) m[r][j] = (m[r][j] - f * m[row][j]) % h;
    }
    pivots.push_back(col);
    ++row;
  }
  ResiduePiece piece{h, pivots.size(), {}};
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<UPoly> v(cols);
    v[free] = UPoly::constant(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    piece.kernel.push_back(std::move(v));
  }
  return piece;
}

}  // namespace

std::vector<ResiduePiece> eliminate_modulo(const UMatrix& m, const UPoly& f) {
  if (f.degree() < 1) throw DomainError("modulus must be nonconstant");
  if (gcd(f, f.derivative()).degree() > 0) throw DomainError("modulus must be squarefree");
  std::vector<ResiduePiece> done;
  std::deque<UPoly> work{f.monic()};
  while (!work.empty()) {
    const UPoly h = work.front();
    work.pop_front();
    auto result = attempt(m, h);
    if (auto* piece = std::get_if<ResiduePiece>(&result)) {
      done.push_back(std::move(*piece));
    } else {
      auto& split = std::get<Split>(result);
      work.push_back(split.a.monic());
      work.push_back(split.b.monic());
    }
  }
  return done;
}

}  // namespace hho
