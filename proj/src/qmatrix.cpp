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

#include "hho/qmatrix.hpp"

#include <utility>

#include "hho/error.hpp"

namespace hho {

namespace {

void require_same_shape(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ArityError("matrix shape mismatch");
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || sgn(m(i, col)) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ArityError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  require_same_shape(a, b);
  QMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
  return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  require_same_shape(a, b);
  QMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
  return r;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw ArityError("matrix product shape mismatch");
  QMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

QMatrix operator*(const Rational& s, QMatrix a) {
  for (auto& v : a.data_) v *= s;
  return a;
}

RationalVector operator*(const QMatrix& a, std::span<const Rational> v) {
  if (a.cols_ != v.size()) throw ArityError("matrix-vector shape mismatch");
  RationalVector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
  }
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool QMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

bool QMatrix::is_skew() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      if ((*this)(i, j) != -(*this)(j, i)) return false;
    }
  }
  return true;
}

Rational QMatrix::determinant() const {
  if (!square()) throw ArityError("determinant of a non-square matrix");
  QMatrix m = *this;
  Rational det = 1;
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t p = col;
    while (p < rows_ && sgn(m(p, col)) == 0) ++p;
    if (p == rows_) return 0;
    if (p != col) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const Rational inv = 1 / m(col, col);
    for (std::size_t i = col + 1; i < rows_; ++i) {
      if (sgn(m(i, col)) == 0) continue;
      const Rational f = m(i, col) * inv;
      for (std::size_t j = col; j < cols_; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

std::size_t QMatrix::rank() const {
  QMatrix m = *this;
  return rref(m).size();
}

std::optional<QMatrix> QMatrix::inverse() const {
  if (!square()) throw ArityError("inverse of a non-square matrix");
  QMatrix aug(rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_ + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < rows_ || pivots.back() >= cols_) return std::nullopt;
  QMatrix inv(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
  }
  return inv;
}

RationalVector QMatrix::solve(std::span<const Rational> b) const {
  if (!square() || b.size() != rows_) throw ArityError("solve shape mismatch");
  QMatrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  const auto pivots = rref(aug);
  if (pivots.size() < rows_ || pivots.back() >= cols_) throw DomainError("singular linear system");
  RationalVector x(rows_);
  for (std::size_t i = 0; i < rows_; ++i) x[i] = aug(i, cols_);
  return x;
}

std::vector<RationalVector> QMatrix::kernel() const {
  QMatrix m = *this;
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols_);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string QMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out += "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += hho::to_string((*this)(i, j));
    }
    out += "]\n";
  }
  return out;
}

}  // namespace hho
