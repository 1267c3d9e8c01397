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

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>

namespace hho {

/// Maximum number of polynomial variables. 3n potential-coordinate symbols
/// at n = 8 is the largest ring the library builds.
inline constexpr std::size_t kMaxVars = 32;

/// Exponent vector packed one byte per variable. Ordering is graded
/// lexicographic with variable 0 the most significant.
class Monomial {
 public:
  constexpr Monomial() = default;

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned exponent(std::size_t index) const {
    return static_cast<unsigned>((words_[index / 8] >> shift(index)) & 0xFFu);
  }
  void set_exponent(std::size_t index, unsigned power);

  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;

  /// Throws DomainError when the total degree would exceed 255.
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(*this).
  Monomial operator/(const Monomial& divisor) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    return a.words_ <=> b.words_;
  }

 private:
  static constexpr unsigned shift(std::size_t index) { return static_cast<unsigned>(8 * (7 - index % 8)); }

  std::array<std::uint64_t, kMaxVars / 8> words_{};
  std::uint16_t degree_ = 0;
};

}  // namespace hho
