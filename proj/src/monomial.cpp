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

#include "hho/monomial.hpp"

#include "hho/error.hpp"

namespace hho {

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  m.set_exponent(index, power);
  return m;
}

void Monomial::set_exponent(std::size_t index, unsigned power) {
  if (index >= kMaxVars) throw ArityError("variable index out of range");
  if (power > 255) throw DomainError("exponent overflow");
  const unsigned old = exponent(index);
  auto& w = words_[index / 8];
  w &= ~(std::uint64_t{0xFF} << shift(index));
  w |= std::uint64_t{power} << shift(index);
  const unsigned degree = degree_ - old + power;
  if (degree > 255) throw DomainError("monomial degree overflow");
  degree_ = static_cast<std::uint16_t>(degree);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::uint64_t a = words_[w];
    if (a == 0) continue;
    const std::uint64_t b = other.words_[w];
    for (unsigned s = 0; s < 64; s += 8) {
      if (((a >> s) & 0xFFu) > ((b >> s) & 0xFFu)) return false;
    }
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  // Bytes cannot carry into each other while the total degree fits in a byte.
  const unsigned degree = unsigned{degree_} + other.degree_;
  if (degree > 255) throw DomainError("monomial degree overflow");
  Monomial m;
  for (std::size_t w = 0; w < words_.size(); ++w) m.words_[w] = words_[w] + other.words_[w];
  m.degree_ = static_cast<std::uint16_t>(degree);
  return m;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial m;
  for (std::size_t w = 0; w < words_.size(); ++w) m.words_[w] = words_[w] - divisor.words_[w];
  m.degree_ = static_cast<std::uint16_t>(degree_ - divisor.degree_);
  return m;
}

}  // namespace hho
