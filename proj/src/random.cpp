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

#include "hho/random.hpp"

#include <limits>

#include "hho/error.hpp"

namespace hho {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw DomainError("empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

Rational Rng::rational(std::int64_t range, std::int64_t max_den) {
  const std::int64_t p = uniform(-range, range);
  const std::int64_t q = uniform(1, max_den);
  Rational r{mpz_class(static_cast<long>(p)), mpz_class(static_cast<long>(q))};
  r.canonicalize();
  return r;
}

RationalVector random_point(Rng& rng, std::size_t n, const SamplingConfig& cfg) {
  RationalVector u(n);
  for (auto& x : u) x = rng.rational(cfg.range, cfg.max_den);
  return u;
}

std::vector<RationalVector> sample_points(const Hho2& op, std::size_t count, Rng& rng, const SamplingConfig& cfg,
                                          const std::function<bool(std::span<const Rational>)>& accept) {
  if (op.is_degenerate()) throw DomainError("no valid sample points: Pf(g) = 0");
  std::vector<RationalVector> points;
  std::size_t rejected = 0;
  while (points.size() < count) {
    RationalVector u = random_point(rng, op.n(), cfg);
    if (sgn(op.pfaffian().evaluate(u)) != 0 && (!accept || accept(u))) {
      points.push_back(std::move(u));
      rejected = 0;
    } else if (++rejected >= cfg.max_retries) {
      throw DomainError("sample space exhausted after " + std::to_string(cfg.max_retries) + " rejected draws");
    }
  }
  return points;
}

FluxParams random_flux_params(Rng& rng, std::size_t n, std::int64_t range) {
  QMatrix A(n, n);
  RationalVector B(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      A(i, j) = static_cast<long>(rng.uniform(-range, range));
      A(j, i) = -A(i, j);
    }
  }
  for (auto& b : B) b = static_cast<long>(rng.uniform(-range, range));
  return FluxParams(std::move(A), std::move(B));
}

LinearMap random_sl(Rng& rng, std::size_t dim, std::int64_t range) {
  QMatrix L = QMatrix::identity(dim), U = QMatrix::identity(dim), D = QMatrix::identity(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < i; ++j) L(i, j) = static_cast<long>(rng.uniform(-range, range));
    for (std::size_t j = i + 1; j < dim; ++j) U(i, j) = static_cast<long>(rng.uniform(-range, range));
  }
  Rational product = 1;
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    D(i, i) = static_cast<long>(rng.uniform(1, 3));
    if (rng.uniform(0, 1) == 1) D(i, i) = 1 / D(i, i);
    product *= D(i, i);
  }
  if (dim > 0) D(dim - 1, dim - 1) = 1 / product;
  return LinearMap(L * D * U);
}

Hho2 random_operator(Rng& rng, std::size_t n, const SamplingConfig& cfg) {
  SkewTensor3 T(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) T.set(i, j, k, rng.rational(cfg.range, cfg.max_den));
    }
  }
  QMatrix g0(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      g0(i, j) = rng.rational(cfg.range, cfg.max_den);
      g0(j, i) = -g0(i, j);
    }
  }
  return Hho2(std::move(T), std::move(g0));
}

ThreeForm random_form(Rng& rng, std::size_t dim, double density, const SamplingConfig& cfg) {
  ThreeForm form(dim);
  const std::int64_t threshold = static_cast<std::int64_t>(density * 1000000.0);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      for (std::size_t k = j + 1; k < dim; ++k) {
        if (rng.uniform(0, 999999) < threshold) form.set(i, j, k, rng.rational(cfg.range, cfg.max_den));
      }
    }
  }
  return form;
}

}  // namespace hho
