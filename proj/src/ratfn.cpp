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

#include "hho/ratfn.hpp"

#include "hho/error.hpp"

namespace hho {

RationalFn::RationalFn(std::size_t arity) : num_(arity), den_(MultiPoly::constant(arity, 1)) {}

RationalFn::RationalFn(MultiPoly numerator)
    : num_(std::move(numerator)), den_(MultiPoly::constant(num_.arity(), 1)) {}

RationalFn::RationalFn(MultiPoly numerator, MultiPoly denominator)
    : RationalFn(std::move(numerator), std::move(denominator), false) {}

RationalFn::RationalFn(MultiPoly numerator, MultiPoly denominator, bool coprime)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.arity() != den_.arity()) throw ArityError("rational function arity mismatch");
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.arity(), 1);
    return;
  }
  if (!den_.is_constant() && !coprime) {
    const MultiPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
  const Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    const Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFn RationalFn::from_coprime(MultiPoly numerator, MultiPoly denominator) {
  return RationalFn(std::move(numerator), std::move(denominator), true);
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.is_zero()) throw DomainError("division by the zero rational function");
  return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFn RationalFn::derivative(std::size_t var) const {
  if (den_.is_constant()) return RationalFn(num_.derivative(var), den_);
  return RationalFn(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

Rational RationalFn::evaluate(std::span<const Rational> point) const {
  const Rational d = den_.evaluate(point);
  if (sgn(d) == 0) throw PoleError("rational function evaluated at a pole");
  return num_.evaluate(point) / d;
}

std::string RationalFn::to_string(std::span<const std::string> names) const {
  if (den_.is_constant()) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

std::string RationalFn::to_string() const {
  const auto names = default_names(arity());
  return to_string(names);
}

}  // namespace hho
