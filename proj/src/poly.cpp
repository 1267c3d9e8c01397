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

#include "hho/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hho/error.hpp"
#include "hho/upoly.hpp"

namespace hho {

namespace {

using Term = MultiPoly::Term;

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = std::move(terms[i].second);
    while (j < terms.size() && terms[j].first == terms[i].first) {
      sum += terms[j].second;
      ++j;
    }
    if (sgn(sum) != 0) {
      terms[out].first = terms[i].first;
      terms[out].second = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

void check_arity(std::size_t arity) {
  if (arity > kMaxVars) throw ArityError("polynomial arity exceeds " + std::to_string(kMaxVars));
}

}  // namespace

MultiPoly::MultiPoly(std::size_t arity) : arity_(arity) { check_arity(arity); }

MultiPoly::MultiPoly(std::size_t arity, std::vector<Term> terms) : arity_(arity), terms_(std::move(terms)) {
  check_arity(arity);
  for (const auto& [m, c] : terms_) {
    for (std::size_t v = arity; v < kMaxVars; ++v) {
      if (m.exponent(v) != 0) throw ArityError("monomial uses a variable outside the ring");
    }
  }
  canonicalize(terms_);
}

MultiPoly MultiPoly::constant(std::size_t arity, const Rational& value) {
  MultiPoly p(arity);
  if (sgn(value) != 0) p.terms_.emplace_back(Monomial{}, value);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw ArityError("variable index outside the ring");
  MultiPoly p(arity);
  p.terms_.emplace_back(Monomial::variable(index), Rational(1));
  return p;
}

void MultiPoly::require_same_arity(const MultiPoly& other) const {
  if (arity_ != other.arity_) {
    throw ArityError("arity mismatch: " + std::to_string(arity_) + " vs " + std::to_string(other.arity_));
  }
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first.degree()));
  return d;
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first.exponent(var)));
  return d;
}

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return 0;
}

Rational MultiPoly::leading_coefficient() const { return terms_.empty() ? Rational(0) : terms_.front().second; }

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading monomial");
  return terms_.front().first;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_arity(other);
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    const auto cmp = terms_[i].first <=> other.terms_[j].first;
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back(other.terms_[j++]);
    } else {
      Rational s = terms_[i].second + other.terms_[j].second;
      if (sgn(s) != 0) out.emplace_back(terms_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
  for (; j < other.terms_.size(); ++j) out.push_back(other.terms_[j]);
  terms_ = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) { return *this += -other; }

MultiPoly& MultiPoly::operator*=(const Rational& factor) {
  if (sgn(factor) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= factor;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_arity(b);
  MultiPoly out(a.arity_);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  const MultiPoly& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const MultiPoly& large = a.terms_.size() <= b.terms_.size() ? b : a;

  if (small.terms_.size() == 1) {
    // Multiplying by a single term preserves the monomial order.
    const auto& [sm, sc] = small.terms_[0];
    out.terms_.reserve(large.terms_.size());
    for (const auto& [m, c] : large.terms_) out.terms_.emplace_back(m * sm, c * sc);
    return out;
  }

  // Johnson's heap merge: one cursor per term of the smaller factor.
  struct Cursor {
    Monomial m;
    std::uint32_t i;
    std::uint32_t j;
  };
  auto less = [](const Cursor& x, const Cursor& y) { return x.m < y.m; };
  std::vector<Cursor> heap;
  heap.reserve(small.terms_.size());
  for (std::uint32_t i = 0; i < small.terms_.size(); ++i) {
    heap.push_back({small.terms_[i].first * large.terms_[0].first, i, 0});
  }
  std::make_heap(heap.begin(), heap.end(), less);

  Rational acc, prod;
  Monomial current;
  bool open = false;
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), less);
    Cursor top = heap.back();
    heap.pop_back();
    mpq_mul(prod.get_mpq_t(), small.terms_[top.i].second.get_mpq_t(), large.terms_[top.j].second.get_mpq_t());
    if (open && top.m == current) {
      acc += prod;
    } else {
      if (open && sgn(acc) != 0) out.terms_.emplace_back(current, acc);
      current = top.m;
      acc = prod;
      open = true;
    }
    if (top.j + 1 < large.terms_.size()) {
      heap.push_back({small.terms_[top.i].first * large.terms_[top.j + 1].first, top.i, top.j + 1});
      std::push_heap(heap.begin(), heap.end(), less);
    }
  }
  if (open && sgn(acc) != 0) out.terms_.emplace_back(current, acc);
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second) return false;
  }
  return true;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(arity_, 1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= arity_) throw ArityError("derivative variable outside the ring");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exponent(var);
    if (e == 0) continue;
    Monomial dm = m;
    dm.set_exponent(var, e - 1);
    out.emplace_back(dm, c * e);
  }
  return MultiPoly(arity_, std::move(out), Canonical{});
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity_) {
    throw ArityError("evaluation point has " + std::to_string(point.size()) + " coordinates, ring has " +
                     std::to_string(arity_));
  }
  std::vector<std::vector<Rational>> powers(arity_);
  for (std::size_t v = 0; v < arity_; ++v) powers[v].push_back(Rational(1));
  Rational sum = 0, term;
  for (const auto& [m, c] : terms_) {
    term = c;
    for (std::size_t v = 0; v < arity_; ++v) {
      const unsigned e = m.exponent(v);
      if (e == 0) continue;
      auto& pw = powers[v];
      while (pw.size() <= e) pw.push_back(pw.back() * point[v]);
      term *= pw[e];
    }
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(std::size_t var, const Rational& value) const {
  if (var >= arity_) throw ArityError("substitution variable outside the ring");
  std::vector<Rational> powers{Rational(1)};
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exponent(var);
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Monomial rest = m;
    rest.set_exponent(var, 0);
    out.emplace_back(rest, c * powers[e]);
  }
  return MultiPoly(arity_, std::move(out));
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
  require_same_arity(value);
  const auto coeffs = coefficients_in(var);
  MultiPoly result(arity_);
  for (auto k = coeffs.size(); k-- > 0;) result = result * value + coeffs[k];
  return result;
}

MultiPoly MultiPoly::with_arity(std::size_t arity) const {
  check_arity(arity);
  if (arity < arity_) {
    for (const auto& t : terms_) {
      for (std::size_t v = arity; v < arity_; ++v) {
        if (t.first.exponent(v) != 0) throw ArityError("cannot drop a variable that occurs");
      }
    }
  }
  return MultiPoly(arity, terms_, Canonical{});
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  require_same_arity(divisor);
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  if (is_zero()) return MultiPoly(arity_);
  if (degree() < divisor.degree()) return std::nullopt;

  const auto& [lead_m, lead_c] = divisor.terms_.front();
  if (divisor.terms_.size() == 1) {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      if (!lead_m.divides(m)) return std::nullopt;
      out.emplace_back(m / lead_m, c / lead_c);
    }
    return MultiPoly(arity_, std::move(out), Canonical{});
  }

  std::map<Monomial, Rational, std::greater<>> rem;
  for (const auto& t : terms_) rem.emplace(t.first, t.second);
  std::vector<Term> quotient;
  Rational scratch;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead_m.divides(it->first)) return std::nullopt;
    const Monomial qm = it->first / lead_m;
    const Rational qc = it->second / lead_c;
    rem.erase(it);
    for (std::size_t k = 1; k < divisor.terms_.size(); ++k) {
      const Monomial key = qm * divisor.terms_[k].first;
      mpq_mul(scratch.get_mpq_t(), qc.get_mpq_t(), divisor.terms_[k].second.get_mpq_t());
      auto [pos, inserted] = rem.try_emplace(key, 0);
      pos->second -= scratch;
      if (sgn(pos->second) == 0) rem.erase(pos);
    }
    quotient.emplace_back(qm, qc);
  }
  return MultiPoly(arity_, std::move(quotient), Canonical{});
}

MultiPoly MultiPoly::operator/(const MultiPoly& divisor) const {
  auto q = divide_exact(divisor);
  if (!q) throw DomainError("polynomial division is not exact");
  return std::move(*q);
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  MultiPoly r = *this;
  const Rational lc = terms_.front().second;
  if (lc == 1) return r;
  for (auto& t : r.terms_) t.second /= lc;
  return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  if (var >= arity_) throw ArityError("variable outside the ring");
  const int deg = degree_in(var);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(deg, 0)) + 1);
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exponent(var);
    Monomial rest = m;
    rest.set_exponent(var, 0);
    buckets[e].emplace_back(rest, c);
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  // Dividing monomials by the same power of `var` keeps their order.
  for (auto& b : buckets) out.push_back(MultiPoly(arity_, std::move(b), Canonical{}));
  return out;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (names.size() < arity_) throw ArityError("not enough variable names");
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < arity_; ++v) {
      const unsigned e = m.exponent(v);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += hho::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += hho::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

std::string MultiPoly::to_string() const {
  const auto names = default_names(arity_);
  return to_string(names);
}

std::vector<std::string> default_names(std::size_t arity) {
  std::vector<std::string> names;
  names.reserve(arity);
  for (std::size_t i = 0; i < arity; ++i) names.push_back("u" + std::to_string(i + 1));
  return names;
}

// ---------------------------------------------------------------------------
// gcd

namespace {

MultiPoly content_in(const MultiPoly& p, std::size_t var) {
  MultiPoly c(p.arity());
  for (const auto& coeff : p.coefficients_in(var)) {
    if (coeff.is_zero()) continue;
    c = gcd(c, coeff);
    if (c.is_constant()) break;
  }
  return c;
}

MultiPoly primitive_part_in(const MultiPoly& p, std::size_t var) {
  if (p.is_zero()) return p;
  return p / content_in(p, var);
}

// Sparse pseudo-remainder of f by g with respect to `var`.
MultiPoly pseudo_remainder(MultiPoly f, const MultiPoly& g, std::size_t var) {
  const int dg = g.degree_in(var);
  const MultiPoly lead_g = g.coefficients_in(var).back();
  while (!f.is_zero() && f.degree_in(var) >= dg) {
    const int df = f.degree_in(var);
    const MultiPoly lead_f = f.coefficients_in(var).back();
    MultiPoly shift = lead_f;
    if (df > dg) {
      MultiPoly xpow = MultiPoly::variable(f.arity(), var).pow(static_cast<unsigned>(df - dg));
      shift = shift * xpow;
    }
    f = lead_g * f - shift * g;
  }
  return f;
}

// p with every variable except `var` fixed; coefficients indexed by the power of var.
UPoly specialize(const MultiPoly& p, std::size_t var, const std::vector<Rational>& point) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(p.degree_in(var), 0)) + 1);
  for (const auto& [m, coeff] : p.terms()) {
    Rational t = coeff;
    for (std::size_t v = 0; v < p.arity(); ++v) {
      if (v == var) continue;
      for (unsigned e = m.exponent(v); e > 0; --e) t *= point[v];
    }
    c[m.exponent(var)] += t;
  }
  return UPoly(std::move(c));
}

// Upper bound for deg_var gcd(a, b) from a specialization that keeps both leading
// coefficients in var nonzero; -1 if no such point was found.
int gcd_degree_bound(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
  const int da = a.degree_in(var), db = b.degree_in(var);
  std::vector<Rational> point(a.arity());
  for (int attempt = 0; attempt < 8; ++attempt) {
    for (std::size_t v = 0; v < point.size(); ++v) {
      point[v] = Rational(static_cast<long>((v * 7 + 3) * (attempt + 1) % 29) - 13, attempt + 1 + static_cast<long>(v % 3));
      point[v].canonicalize();
    }
    const UPoly sa = specialize(a, var, point), sb = specialize(b, var, point);
    if (sa.degree() != da || sb.degree() != db) continue;
    return gcd(sa, sb).degree();
  }
  return -1;
}

// True when a specialization argument proves gcd(a, b) is constant.
bool provably_coprime(const MultiPoly& a, const MultiPoly& b) {
  for (std::size_t v = 0; v < a.arity(); ++v) {
    if (a.degree_in(v) == 0 || b.degree_in(v) == 0) continue;
    if (gcd_degree_bound(a, b, v) != 0) return false;
  }
  return true;
}

MultiPoly primitive_prs(MultiPoly f, MultiPoly g, std::size_t var) {
  if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);
  while (true) {
    MultiPoly r = pseudo_remainder(f, g, var);
    if (r.is_zero()) return primitive_part_in(g, var);
    if (r.degree_in(var) == 0) return MultiPoly::constant(f.arity(), 1);
    f = std::move(g);
    g = primitive_part_in(r, var);
  }
}

}  // namespace

MultiPoly gcd(const MultiPoly& x, const MultiPoly& y) {
  if (x.arity() != y.arity()) throw ArityError("gcd arity mismatch");
  if (x.is_zero()) return y.monic();
  if (y.is_zero()) return x.monic();
  if (x.is_constant() || y.is_constant()) return MultiPoly::constant(x.arity(), 1);
  // a is the larger operand; its content is never formed directly.
  const MultiPoly& a = x.size() >= y.size() ? x : y;
  const MultiPoly& b = x.size() >= y.size() ? y : x;
  if (a.divide_exact(b)) return b.monic();
  if (provably_coprime(a, b)) return MultiPoly::constant(a.arity(), 1);

  std::size_t var = a.arity();
  for (std::size_t v = 0; v < a.arity(); ++v) {
    const int db = b.degree_in(v);
    if (db == 0 || a.degree_in(v) < db) continue;
    if (var == a.arity() || db < b.degree_in(var)) var = v;
  }
  if (var == a.arity()) {
    for (std::size_t v = 0; v < a.arity(); ++v) {
      const int da = a.degree_in(v);
      const int db = b.degree_in(v);
      if (da == 0 && db == 0) continue;
      if (db == 0) return gcd(content_in(a, v), b);
      if (da == 0) return gcd(a, content_in(b, v));
      const MultiPoly ca = content_in(a, v);
      const MultiPoly cb = content_in(b, v);
      const MultiPoly g = primitive_prs(a / ca, b / cb, v);
      return (gcd(ca, cb) * g).monic();
    }
    return MultiPoly::constant(a.arity(), 1);
  }

  MultiPoly c = content_in(b, var);
  const MultiPoly pb = b / c;
  for (const auto& coeff : a.coefficients_in(var)) {
    if (c.is_constant()) break;
    if (!coeff.is_zero()) c = gcd(coeff, c);
  }
  MultiPoly g = MultiPoly::constant(a.arity(), 1);
  const MultiPoly r = pseudo_remainder(a, pb, var);
  if (r.is_zero()) {
    g = pb;
  } else if (r.degree_in(var) > 0) {
    g = primitive_prs(pb, primitive_part_in(r, var), var);
  }
  return (c * g).monic();
}

}  // namespace hho
