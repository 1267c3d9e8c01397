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

#include "hho/upoly.hpp"

#include <algorithm>
#include <set>

#include "hho/error.hpp"

namespace hho {

UPoly::UPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::x() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(c));
}

UPoly operator*(const Rational& s, const UPoly& a) {
  std::vector<Rational> c = a.c_;
  for (auto& v : c) v *= s;
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("univariate division by zero");
  if (degree() < divisor.degree()) return {UPoly{}, *this};
  std::vector<Rational> rem = c_;
  std::vector<Rational> quo(c_.size() - divisor.c_.size() + 1);
  const Rational& lead = divisor.c_.back();
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rational q = rem[k + divisor.c_.size() - 1] / lead;
    quo[k] = q;
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j < divisor.c_.size(); ++j) rem[k + j] -= q * divisor.c_[j];
  }
  rem.resize(divisor.c_.size() - 1);
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly UPoly::operator/(const UPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw DomainError("univariate division is not exact");
  return q;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return (1 / leading()) * *this;
}

Rational UPoly::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * at + c_[k];
  return acc;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly r = constant(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::optional<UPoly> UPoly::inverse_mod(const UPoly& modulus) const {
  // Extended Euclid tracking only the coefficient of *this.
  UPoly r0 = modulus, r1 = *this % modulus;
  UPoly s0, s1 = constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) return std::nullopt;
  return ((1 / r0.leading()) * s0) % modulus;
}

UPoly UPoly::from_multipoly(const MultiPoly& p) {
  if (p.arity() != 1) throw ArityError("univariate conversion needs a one-variable polynomial");
  if (p.is_zero()) return {};
  std::vector<Rational> c(static_cast<std::size_t>(p.degree()) + 1);
  for (const auto& [m, coeff] : p.terms()) c[m.exponent(0)] = coeff;
  return UPoly(std::move(c));
}

MultiPoly UPoly::to_multipoly() const {
  std::vector<MultiPoly::Term> terms;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k]) != 0) terms.emplace_back(Monomial::variable(0, static_cast<unsigned>(k)), c_[k]);
  }
  return MultiPoly(1, std::move(terms));
}

std::string UPoly::to_string(const std::string& var) const {
  const std::vector<std::string> names{var};
  return to_multipoly().to_string(names);
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<UPoly> squarefree_decomposition(const UPoly& p) {
  if (p.degree() < 1) return {};
  const UPoly f = p.monic();
  const UPoly df = f.derivative();
  UPoly a = gcd(f, df);
  UPoly b = f / a;
  UPoly c = df / a;
  UPoly d = c - b.derivative();
  std::vector<UPoly> out;
  while (b.degree() > 0) {
    a = gcd(b, d);
    out.push_back(a);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
  }
  return out;
}

namespace {

std::optional<std::vector<mpz_class>> positive_divisors(mpz_class n) {
  n = abs(n);
  static const mpz_class kLimit("1000000000000");
  if (n > kLimit) return std::nullopt;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots(const UPoly& p) {
  if (p.degree() < 1) return std::vector<Rational>{};
  mpz_class lcm_den = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : p.coefficients()) ints.push_back(c.get_num() * (lcm_den / c.get_den()));

  std::set<Rational> roots;
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  if (low + 1 >= ints.size()) return std::vector<Rational>(roots.begin(), roots.end());

  const auto ps = positive_divisors(ints[low]);
  const auto qs = positive_divisors(ints.back());
  if (!ps || !qs) return std::nullopt;
  for (const auto& num : *ps) {
    for (const auto& den : *qs) {
      for (int sign : {1, -1}) {
        Rational cand(num * sign, den);
        cand.canonicalize();
        if (roots.count(cand)) continue;
        if (sgn(p.evaluate(cand)) == 0) roots.insert(cand);
      }
    }
  }
  return std::vector<Rational>(roots.begin(), roots.end());
}

}  // namespace hho
