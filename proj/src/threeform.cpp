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

#include "hho/threeform.hpp"

#include <algorithm>

#include "hho/error.hpp"

namespace hho {

namespace {

// Sorts (i,j,k) in place and returns the permutation sign, 0 on repeats.
int sort_triple(Triple& t) {
  int sign = 1;
  if (t[0] > t[1]) std::swap(t[0], t[1]), sign = -sign;
  if (t[1] > t[2]) std::swap(t[1], t[2]), sign = -sign;
  if (t[0] > t[1]) std::swap(t[0], t[1]), sign = -sign;
  if (t[0] == t[1] || t[1] == t[2]) return 0;
  return sign;
}

Rational minor3(const QMatrix& a, const Triple& r, const Triple& c) {
  const auto e = [&](int i, int j) -> const Rational& { return a(r[i], c[j]); };
  return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
         e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

}  // namespace

void SkewTensor3::check_index(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw ArityError("tensor index out of range");
}

Rational SkewTensor3::operator()(std::size_t i, std::size_t j, std::size_t k) const {
  check_index(i, j, k);
  Triple t{i, j, k};
  const int sign = sort_triple(t);
  if (sign == 0) return 0;
  const auto it = coeffs_.find(t);
  if (it == coeffs_.end()) return 0;
  return sign > 0 ? it->second : Rational(-it->second);
}

void SkewTensor3::set(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
  check_index(i, j, k);
  Triple t{i, j, k};
  const int sign = sort_triple(t);
  if (sign == 0) {
    if (sgn(value) != 0) throw DomainError("skew tensor component with a repeated index must vanish");
    return;
  }
  if (sgn(value) == 0) {
    coeffs_.erase(t);
  } else {
    coeffs_[t] = sign > 0 ? value : Rational(-value);
  }
}

void SkewTensor3::add(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
  set(i, j, k, (*this)(i, j, k) + value);
}

std::vector<Rational> SkewTensor3::dense() const {
  std::vector<Rational> out(dim_ * dim_ * dim_);
  for (const auto& [t, v] : coeffs_) {
    const auto put = [&](std::size_t a, std::size_t b, std::size_t c, const Rational& x) {
      out[(a * dim_ + b) * dim_ + c] = x;
    };
    const Rational neg = -v;
    put(t[0], t[1], t[2], v);
    put(t[1], t[2], t[0], v);
    put(t[2], t[0], t[1], v);
    put(t[1], t[0], t[2], neg);
    put(t[0], t[2], t[1], neg);
    put(t[2], t[1], t[0], neg);
  }
  return out;
}

SkewTensor3 SkewTensor3::from_dense(std::size_t dim, std::span<const Rational> values) {
  if (values.size() != dim * dim * dim) throw ArityError("dense tensor has the wrong size");
  SkewTensor3 t(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      for (std::size_t k = j + 1; k < dim; ++k) {
        if (sgn(values[(i * dim + j) * dim + k]) != 0) t.coeffs_[{i, j, k}] = values[(i * dim + j) * dim + k];
      }
    }
  }
  if (!std::equal(values.begin(), values.end(), t.dense().begin())) {
    throw DomainError("tensor is not totally skew");
  }
  return t;
}

SkewTensor3 operator+(const SkewTensor3& a, const SkewTensor3& b) {
  if (a.dim_ != b.dim_) throw ArityError("tensor dimension mismatch");
  SkewTensor3 r = a;
  for (const auto& [t, v] : b.coeffs_) r.add(t[0], t[1], t[2], v);
  return r;
}

SkewTensor3 operator*(const Rational& s, const SkewTensor3& a) {
  SkewTensor3 r(a.dim_);
  if (sgn(s) == 0) return r;
  for (const auto& [t, v] : a.coeffs_) r.coeffs_[t] = s * v;
  return r;
}

LinearMap::LinearMap(QMatrix a) : a_(std::move(a)) {
  if (!a_.square()) throw DomainError("linear map must be square");
  det_ = a_.determinant();
  if (sgn(det_) == 0) throw DomainError("linear map is singular");
}

ThreeForm pullback(const ThreeForm& form, const LinearMap& a) {
  if (form.dim() != a.dim()) throw ArityError("pullback dimension mismatch");
  const std::size_t d = form.dim();
  ThreeForm out(d);
  for (std::size_t l = 0; l < d; ++l) {
    for (std::size_t m = l + 1; m < d; ++m) {
      for (std::size_t n = m + 1; n < d; ++n) {
        Rational sum = 0;
        for (const auto& [t, v] : form.coefficients()) sum += v * minor3(a.matrix(), t, {l, m, n});
        out.set(l, m, n, sum);
      }
    }
  }
  return out;
}

ChartData chart_restrict(const ThreeForm& form) {
  if (form.dim() == 0) throw ArityError("3-form of dimension zero");
  const std::size_t n = form.dim() - 1;
  ChartData chart{SkewTensor3(n), QMatrix(n, n)};
  for (const auto& [t, v] : form.coefficients()) {
    if (t[2] == n) {
      chart.g0(t[0], t[1]) = 3 * v;
      chart.g0(t[1], t[0]) = -3 * v;
    } else {
      chart.T.set(t[0], t[1], t[2], 3 * v);
    }
  }
  return chart;
}

ThreeForm embed(const SkewTensor3& T, const QMatrix& g0) {
  const std::size_t n = T.dim();
  if (g0.rows() != n || g0.cols() != n) throw ArityError("g0 size does not match T");
  if (!g0.is_skew()) throw DomainError("g0 is not skew");
  ThreeForm form(n + 1);
  for (const auto& [t, v] : T.coefficients()) form.set(t[0], t[1], t[2], v / 3);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) form.set(i, j, n, g0(i, j) / 3);
  }
  return form;
}

std::vector<std::pair<std::size_t, std::size_t>> pluecker_pairs(std::size_t dim) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t m = 0; m < dim; ++m) {
    for (std::size_t n = m + 1; n < dim; ++n) pairs.emplace_back(m, n);
  }
  return pairs;
}

QMatrix congruence_system(const ThreeForm& form) {
  const auto pairs = pluecker_pairs(form.dim());
  QMatrix sys(form.dim(), pairs.size());
  for (std::size_t l = 0; l < form.dim(); ++l) {
    for (std::size_t c = 0; c < pairs.size(); ++c) sys(l, c) = 2 * form(l, pairs[c].first, pairs[c].second);
  }
  return sys;
}

}  // namespace hho
