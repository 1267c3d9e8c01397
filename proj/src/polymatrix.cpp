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

#include "hho/polymatrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>
#include <utility>

#include "hho/error.hpp"

namespace hho {

PolyMatrix::PolyMatrix(std::size_t dim, std::size_t arity)
    : dim_(dim), arity_(arity), entries_(dim * dim, MultiPoly(arity)) {}

PolyMatrix PolyMatrix::identity(std::size_t dim, std::size_t arity) {
  PolyMatrix m(dim, arity);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = MultiPoly::constant(arity, 1);
  return m;
}

PolyMatrix PolyMatrix::from_rational(const QMatrix& q, std::size_t arity) {
  if (!q.square()) throw ArityError("polynomial matrices are square");
  PolyMatrix m(q.rows(), arity);
  for (std::size_t i = 0; i < q.rows(); ++i) {
    for (std::size_t j = 0; j < q.cols(); ++j) m(i, j) = MultiPoly::constant(arity, q(i, j));
  }
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim_ != b.dim_ || a.arity_ != b.arity_) throw ArityError("polynomial matrix product mismatch");
  PolyMatrix r(a.dim_, a.arity_);
  for (std::size_t i = 0; i < a.dim_; ++i) {
    for (std::size_t k = 0; k < a.dim_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.dim_; ++j) {
        if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim_ != b.dim_ || a.arity_ != b.arity_) throw ArityError("polynomial matrix sum mismatch");
  PolyMatrix r = a;
  for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] += b.entries_[k];
  return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim_ != b.dim_ || a.arity_ != b.arity_) throw ArityError("polynomial matrix difference mismatch");
  PolyMatrix r = a;
  for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] -= b.entries_[k];
  return r;
}

PolyMatrix operator*(const MultiPoly& s, const PolyMatrix& a) {
  PolyMatrix r = a;
  for (auto& e : r.entries_) e = s * e;
  return r;
}

bool PolyMatrix::is_skew() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!(*this)(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if (!((*this)(i, j) + (*this)(j, i)).is_zero()) return false;
    }
  }
  return true;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

QMatrix PolyMatrix::evaluate(std::span<const Rational> point) const {
  QMatrix q(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) q(i, j) = (*this)(i, j).evaluate(point);
  }
  return q;
}

// ---------------------------------------------------------------------------
// Bareiss

MultiPoly det_bareiss(const PolyMatrix& input, Execution exec) {
  const std::size_t n = input.dim();
  if (n == 0) return MultiPoly::constant(input.arity(), 1);
  PolyMatrix m = input;
  bool negate = false;
  MultiPoly previous = MultiPoly::constant(input.arity(), 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return MultiPoly(input.arity());
      for (std::size_t j = k; j < n; ++j) std::swap(m(p, j), m(k, j));
      negate = !negate;
    }
    const std::size_t span = n - k - 1;
    const long cells = static_cast<long>(span * span);
    const MultiPoly& pivot = m(k, k);
    // Exact division by the previous pivot is Sylvester's identity.
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
    for (long c = 0; c < cells; ++c) {
      const std::size_t i = k + 1 + static_cast<std::size_t>(c) / span;
      const std::size_t j = k + 1 + static_cast<std::size_t>(c) % span;
      MultiPoly v = pivot * m(i, j) - m(i, k) * m(k, j);
      m(i, j) = previous.is_constant() ? v * (1 / previous.constant_term()) : v / previous;
    }
    previous = m(k, k);
  }
  MultiPoly det = m(n - 1, n - 1);
  return negate ? -det : det;
}

// ---------------------------------------------------------------------------
// Pfaffian over subsets

namespace {

using Mask = std::uint32_t;

void require_skew_even(const PolyMatrix& m) {
  if (m.dim() % 2 != 0) throw DomainError("Pfaffian of an odd-dimensional matrix");
  if (m.dim() > 24) throw DomainError("Pfaffian dimension too large");
  if (!m.is_skew()) throw DomainError("Pfaffian of a non-skew matrix");
}

class PfaffianTable {
 public:
  PfaffianTable(const PolyMatrix& m, const std::vector<Mask>& targets, Execution exec) : m_(m) {
    std::unordered_set<Mask> needed;
    std::vector<Mask> stack(targets.begin(), targets.end());
    while (!stack.empty()) {
      const Mask s = stack.back();
      stack.pop_back();
      if (!needed.insert(s).second || s == 0) continue;
      const int first = std::countr_zero(s);
      for (Mask rest = s & (s - 1); rest != 0; rest &= rest - 1) {
        const int t = std::countr_zero(rest);
        if (!m_(first, t).is_zero()) stack.push_back(s & ~(Mask{1} << first) & ~(Mask{1} << t));
      }
    }
    std::vector<std::vector<Mask>> levels(m.dim() / 2 + 1);
    for (Mask s : needed) levels[std::popcount(s) / 2].push_back(s);
    for (auto& level : levels) std::sort(level.begin(), level.end());

    values_.emplace(Mask{0}, MultiPoly::constant(m.arity(), 1));
    for (std::size_t lv = 1; lv < levels.size(); ++lv) {
      const auto& level = levels[lv];
      std::vector<MultiPoly> results(level.size(), MultiPoly(m.arity()));
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
      for (long idx = 0; idx < static_cast<long>(level.size()); ++idx) {
        results[idx] = expand(level[idx]);
      }
      for (std::size_t idx = 0; idx < level.size(); ++idx) values_.emplace(level[idx], std::move(results[idx]));
    }
  }

  const MultiPoly& at(Mask s) const { return values_.at(s); }

 private:
  MultiPoly expand(Mask s) const {
    MultiPoly sum(m_.arity());
    const int first = std::countr_zero(s);
    bool positive = true;
    for (Mask rest = s & (s - 1); rest != 0; rest &= rest - 1) {
      const int t = std::countr_zero(rest);
      const MultiPoly& entry = m_(first, t);
      if (!entry.is_zero()) {
        const MultiPoly term = entry * values_.at(s & ~(Mask{1} << first) & ~(Mask{1} << t));
        if (positive) {
          sum += term;
        } else {
          sum -= term;
        }
      }
      positive = !positive;
    }
    return sum;
  }

  const PolyMatrix& m_;
  std::unordered_map<Mask, MultiPoly> values_;
};

Mask full_mask(std::size_t n) { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace

MultiPoly pfaffian(const PolyMatrix& m, Execution exec) {
  require_skew_even(m);
  const Mask all = full_mask(m.dim());
  PfaffianTable table(m, {all}, exec);
  return table.at(all);
}

RationalFn SkewInverse::entry(std::size_t i, std::size_t j) const { return RationalFn(numerators(i, j), pfaffian); }

std::vector<RationalFn> SkewInverse::reduced() const {
  std::vector<RationalFn> out;
  out.reserve(numerators.dim() * numerators.dim());
  for (std::size_t i = 0; i < numerators.dim(); ++i) {
    for (std::size_t j = 0; j < numerators.dim(); ++j) out.push_back(entry(i, j));
  }
  return out;
}

SkewInverse inverse_skew(const PolyMatrix& m, Execution exec) {
  require_skew_even(m);
  const std::size_t n = m.dim();
  const Mask all = full_mask(n);
  std::vector<Mask> targets{all};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) targets.push_back(all & ~(Mask{1} << i) & ~(Mask{1} << j));
  }
  PfaffianTable table(m, targets, exec);
  SkewInverse inv{table.at(all), PolyMatrix(n, m.arity())};
  if (inv.pfaffian.is_zero()) throw DomainError("skew matrix is identically singular");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Row expansion of the Pfaffian gives M^{-1}_{ij} = (-1)^{i+j} Pf(M without i, j) / Pf(M), i < j.
      MultiPoly minor = table.at(all & ~(Mask{1} << i) & ~(Mask{1} << j));
      if ((i + j) % 2 == 1) minor = -minor;
      inv.numerators(j, i) = -minor;
      inv.numerators(i, j) = std::move(minor);
    }
  }
  return inv;
}

std::size_t generic_rank(const PolyMatrix& input) {
  const std::size_t n = input.dim();
  PolyMatrix m = input;
  MultiPoly previous = MultiPoly::constant(input.arity(), 1);
  std::size_t rank = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = n, pc = n;
    for (std::size_t i = k; i < n && pr == n; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        if (!m(i, j).is_zero()) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr == n) break;
    for (std::size_t j = 0; j < n; ++j) std::swap(m(pr, j), m(k, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(m(i, pc), m(i, k));
    ++rank;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / previous;
      }
    }
    previous = m(k, k);
  }
  return rank;
}

}  // namespace hho
