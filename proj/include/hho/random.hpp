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

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "hho/hydro.hpp"
#include "hho/operator.hpp"
#include "hho/threeform.hpp"

namespace hho {

/// Seeded source for every random draw in the library. Bounded integers use
/// rejection sampling on the raw 64-bit stream, so a seed reproduces the same
/// values on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// p/q with p uniform in [-range, range] and q uniform in [1, max_den].
  Rational rational(std::int64_t range, std::int64_t max_den);

 private:
  std::mt19937_64 engine_;
};

struct SamplingConfig {
  std::int64_t range = 10;
  std::int64_t max_den = 10;
  std::size_t max_retries = 1000;
};

RationalVector random_point(Rng& rng, std::size_t n, const SamplingConfig& cfg = {});

/// `count` points where Pf(g) and every extra predicate are nonzero. Throws
/// DomainError when max_retries consecutive draws are rejected.
std::vector<RationalVector> sample_points(const Hho2& op, std::size_t count, Rng& rng, const SamplingConfig& cfg = {},
                                          const std::function<bool(std::span<const Rational>)>& accept = {});

/// Skew A and vector B with integer entries in [-range, range].
FluxParams random_flux_params(Rng& rng, std::size_t n, std::int64_t range = 10);

/// Element of SL(dim, Q): unit lower times unit upper triangular with small
/// integer entries, times a diagonal of determinant 1.
LinearMap random_sl(Rng& rng, std::size_t dim, std::int64_t range = 3);

/// Random skew tensor and skew g0 with entries p/q, |p| <= range, q <= max_den.
Hho2 random_operator(Rng& rng, std::size_t n, const SamplingConfig& cfg = {});

/// Random 3-form with the given density of nonzero coefficients in [0, 1].
ThreeForm random_form(Rng& rng, std::size_t dim, double density = 1.0, const SamplingConfig& cfg = {});

}  // namespace hho
